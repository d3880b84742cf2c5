"""f-factors through Tutte's gadget reduction to perfect matching.

For every vertex ``v`` the gadget has one *external* vertex per incident edge
and ``d(v) - f(v)`` *internal* vertices joined to all externals of ``v``.  Each
original edge ``{u, v}`` becomes a single external-external edge.  Internal
vertices soak up exactly ``d(v) - f(v)`` externals of ``v`` in any perfect
matching, so the matched external-external edges form an f-factor, and every
f-factor arises this way.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from cfactor.graph import (
    DegreeSpec,
    Edge,
    FactorSubgraph,
    Graph,
    ValidationError,
    Weight,
    edge,
)
from cfactor.matching import edmonds, min_weight_perfect_matching


@dataclass(frozen=True)
class TutteGadget:
    gadget_graph: Graph
    edge_of: Mapping[Edge, Edge | None]
    externals: Mapping[tuple[int, Edge], int]
    internals: Mapping[int, tuple[int, ...]]

    def read_back(self, matched: Iterable[Edge]) -> set[Edge]:
        """Original edges selected by a set of matched gadget edges."""
        out = set()
        for ge in matched:
            e = self.edge_of[edge(*ge)]
            if e is not None:
                out.add(e)
        return out


def _as_spec(f: DegreeSpec | Sequence[int]) -> DegreeSpec:
    return f if isinstance(f, DegreeSpec) else DegreeSpec.of(f)


def _layout(G: Graph, f: DegreeSpec):
    """Gadget vertex numbering: per vertex, its externals then its internals."""
    ext: dict[tuple[int, Edge], int] = {}
    internals: dict[int, tuple[int, ...]] = {}
    count = 0
    for v in range(G.n):
        for e in G.incident(v):
            ext[(v, e)] = count
            count += 1
        k = G.degree(v) - f[v]
        internals[v] = tuple(range(count, count + k))
        count += k
    return count, ext, internals


def build_gadget(
    G: Graph,
    f: DegreeSpec | Sequence[int],
    w: Mapping[Edge, Weight] | None = None,
) -> TutteGadget:
    """Construct the gadget; weighted when ``w`` is given or ``G`` is weighted.

    Raises:
        ValidationError: if some ``f(v)`` is negative or exceeds ``d_G(v)``.
    """
    f = _as_spec(f)
    f.check_length(G)
    for v in range(G.n):
        if f[v] > G.degree(v):
            raise ValidationError(f"f({v}) = {f[v]} exceeds degree {G.degree(v)}")
    if w is not None:
        G = G.with_weights(w)
    count, ext, internals = _layout(G, f)
    edge_of: dict[Edge, Edge | None] = {}
    weights: dict[Edge, Weight] = {}
    for u, v in G.edges:
        ge = edge(ext[(u, (u, v))], ext[(v, (u, v))])
        edge_of[ge] = (u, v)
        if G.weighted:
            weights[ge] = G.weight((u, v))
    for v in range(G.n):
        for e in G.incident(v):
            for x in internals[v]:
                ge = edge(x, ext[(v, e)])
                edge_of[ge] = None
                weights[ge] = 0
    gadget = Graph.from_edges(count, edge_of.keys(), weights if G.weighted else None)
    return TutteGadget(gadget, edge_of, ext, internals)


def _trivially_none(G: Graph, f: DegreeSpec) -> bool:
    if not f.parity_ok():
        return True
    return any(f[v] > G.degree(v) for v in range(G.n))


def f_factor(G: Graph, f: DegreeSpec | Sequence[int]) -> FactorSubgraph | None:
    """Some f-factor of ``G``, or ``None`` when there is none.

    Targets above a vertex degree are accepted and simply make the answer
    ``None``; negative targets raise :class:`ValidationError`.
    """
    f = _as_spec(f)
    f.check_length(G)
    if _trivially_none(G, f):
        return None
    if all(f[v] == G.degree(v) for v in range(G.n)):
        return FactorSubgraph(G, G.edges)
    count, ext, internals = _layout(G, f)
    adj: list[list[int]] = [[] for _ in range(count)]
    for u, v in G.edges:
        a, b = ext[(u, (u, v))], ext[(v, (u, v))]
        adj[a].append(b)
        adj[b].append(a)
    for v in range(G.n):
        inner = internals[v]
        if not inner:
            continue
        outer = [ext[(v, e)] for e in G.incident(v)]
        for x in inner:
            adj[x].extend(outer)
        for y in outer:
            adj[y].extend(inner)
    mate = edmonds(count, adj, perfect_only=True)
    if mate is None:
        return None
    chosen = [(u, v) for u, v in G.edges if mate[ext[(u, (u, v))]] == ext[(v, (u, v))]]
    return FactorSubgraph(G, chosen)


def _reduce_forced(G: Graph, f: DegreeSpec, S: Iterable[Edge]):
    forced = {edge(*e) for e in S}
    for e in forced:
        if not G.has_edge(*e):
            raise ValidationError(f"forced edge {e} is not an edge of the graph")
    residual = list(f.values)
    for u, v in forced:
        residual[u] -= 1
        residual[v] -= 1
    if min(residual, default=0) < 0:
        return forced, None, None
    return forced, G.subgraph_without(forced), DegreeSpec(tuple(residual))


def f_factor_with_forced(
    G: Graph, f: DegreeSpec | Sequence[int], S: Iterable[Edge]
) -> FactorSubgraph | None:
    """An f-factor containing every edge of ``S``, or ``None``.

    Deletes ``S``, solves for the residual targets, then adds ``S`` back.
    """
    f = _as_spec(f)
    f.check_length(G)
    forced, rest, residual = _reduce_forced(G, f, S)
    if rest is None:
        return None
    H = f_factor(rest, residual)
    if H is None:
        return None
    return FactorSubgraph(G, H.edges | forced)


def min_weight_f_factor(
    G: Graph,
    f: DegreeSpec | Sequence[int],
    w: Mapping[Edge, Weight] | None = None,
) -> FactorSubgraph | None:
    """Minimum total-weight f-factor, or ``None``."""
    f = _as_spec(f)
    f.check_length(G)
    if w is not None:
        G = G.with_weights(w)
    if not G.weighted:
        raise ValidationError("min_weight_f_factor needs edge weights")
    if _trivially_none(G, f):
        return None
    if all(f[v] == G.degree(v) for v in range(G.n)):
        return FactorSubgraph(G, G.edges)
    gadget = build_gadget(G, f)
    pm = min_weight_perfect_matching(gadget.gadget_graph)
    if pm is None:
        return None
    return FactorSubgraph(G, gadget.read_back(pm.pairs))


def min_weight_f_factor_with_forced(
    G: Graph,
    f: DegreeSpec | Sequence[int],
    w: Mapping[Edge, Weight] | None,
    S: Iterable[Edge],
) -> FactorSubgraph | None:
    """Minimum-weight f-factor among those containing ``S`` (weight includes ``S``)."""
    f = _as_spec(f)
    f.check_length(G)
    if w is not None:
        G = G.with_weights(w)
    if not G.weighted:
        raise ValidationError("min_weight_f_factor_with_forced needs edge weights")
    forced, rest, residual = _reduce_forced(G, f, S)
    if rest is None:
        return None
    H = min_weight_f_factor(rest, residual)
    if H is None:
        return None
    return FactorSubgraph(G, H.edges | forced)


def is_f_factor(
    G: Graph, f: DegreeSpec | Sequence[int], H: FactorSubgraph | Iterable[Edge]
) -> bool:
    f = _as_spec(f)
    if len(f) != G.n:
        return False
    edges = H.edges if isinstance(H, FactorSubgraph) else {edge(*e) for e in H}
    deg = [0] * G.n
    for u, v in edges:
        if not G.has_edge(u, v):
            return False
        deg[u] += 1
        deg[v] += 1
    return all(deg[v] == f[v] for v in range(G.n))
