"""Graph primitives: simple graphs, degree specifications, partitions,
quotient multigraphs and spanning-tree enumeration over quotients.

Edges are always stored as normalized ``(u, v)`` tuples with ``u < v``.  The
position of an edge in ``Graph.edges`` (which is sorted) is its edge id.
"""

from __future__ import annotations

import numbers
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

Edge = tuple[int, int]
Weight = int | Fraction


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class SizeLimitError(ValidationError):
    """Raised when an instance is too large for an exhaustive routine."""


def edge(u: int, v: int) -> Edge:
    """Return the normalized form of the undirected edge ``{u, v}``."""
    return (u, v) if u < v else (v, u)


def _exact_weight(value) -> Weight:
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        raise ValidationError(f"weight {value!r} is not an exact integer or rational")
    if value < 0:
        raise ValidationError(f"negative weight {value!r}")
    if isinstance(value, numbers.Integral):
        return int(value)
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Build instances with :meth:`Graph.from_edges`; the raw constructor expects
    already sorted, normalized edges.  ``weights`` is either ``None`` or a tuple
    aligned with ``edges``.
    """

    n: int
    edges: tuple[Edge, ...]
    weights: tuple[Weight, ...] | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        index: dict[Edge, int] = {}
        adj: list[list[int]] = [[] for _ in range(self.n)]
        prev = None
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValidationError(f"edge ({u}, {v}) is not normalized or out of range")
            if prev is not None and (u, v) <= prev:
                raise ValidationError(f"edges not strictly sorted at ({u}, {v})")
            prev = (u, v)
            index[(u, v)] = i
            adj[u].append(v)
            adj[v].append(u)
        if self.weights is not None and len(self.weights) != len(self.edges):
            raise ValidationError("every edge of a weighted graph needs a weight")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        weights: Mapping[Edge, Weight] | Sequence[Weight] | None = None,
    ) -> Graph:
        """Build a graph from an edge iterable.

        ``weights`` may be a mapping keyed by edge (either orientation) or a
        sequence aligned with ``edges`` as given.
        """
        raw = [tuple(e) for e in edges]
        norm: list[Edge] = []
        seen: set[Edge] = set()
        for e in raw:
            if len(e) != 2:
                raise ValidationError(f"edge {e!r} must have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            ne = edge(u, v)
            if ne in seen:
                raise ValidationError(f"duplicate edge ({ne[0]}, {ne[1]})")
            seen.add(ne)
            norm.append(ne)
        wmap: dict[Edge, Weight] | None = None
        if weights is not None:
            wmap = {}
            if isinstance(weights, Mapping):
                for key, w in weights.items():
                    wmap[edge(*key)] = _exact_weight(w)
                missing = [e for e in norm if e not in wmap]
                if missing:
                    raise ValidationError(f"missing weight for edge {missing[0]}")
            else:
                if len(weights) != len(norm):
                    raise ValidationError("weight sequence length differs from edge count")
                for e, w in zip(norm, weights):
                    wmap[e] = _exact_weight(w)
        ordered = tuple(sorted(norm))
        wt = None if wmap is None else tuple(wmap[e] for e in ordered)
        return cls(n, ordered, wt)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._index

    def edge_id(self, e: Edge) -> int:
        return self._index[edge(*e)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def incident(self, v: int) -> list[Edge]:
        return [edge(v, u) for u in self._adj[v]]

    def weight(self, e: Edge) -> Weight:
        if self.weights is None:
            raise ValidationError("graph is unweighted")
        return self.weights[self._index[edge(*e)]]

    def total_weight(self, edges: Iterable[Edge]) -> Weight:
        return sum((self.weight(e) for e in edges), 0)

    def with_weights(self, weights: Mapping[Edge, Weight] | Sequence[Weight]) -> Graph:
        return Graph.from_edges(self.n, self.edges, weights)

    def unweighted(self) -> Graph:
        return Graph(self.n, self.edges) if self.weighted else self

    def subgraph_without(self, removed: Iterable[Edge]) -> Graph:
        """Spanning subgraph with the given edges deleted (weights kept)."""
        drop = {edge(*e) for e in removed}
        keep = [i for i, e in enumerate(self.edges) if e not in drop]
        wt = None if self.weights is None else tuple(self.weights[i] for i in keep)
        return Graph(self.n, tuple(self.edges[i] for i in keep), wt)


@dataclass(frozen=True)
class DegreeSpec:
    """Target degree ``f(v)`` for every vertex."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, x in enumerate(self.values):
            if isinstance(x, bool) or not isinstance(x, numbers.Integral):
                raise ValidationError(f"f({v}) = {x!r} is not an integer")
            if x < 0:
                raise ValidationError(f"f({v}) = {x} is negative")

    @classmethod
    def of(cls, values: Iterable[int]) -> DegreeSpec:
        return cls(tuple(int(x) for x in values))

    @classmethod
    def constant(cls, n: int, k: int) -> DegreeSpec:
        return cls((k,) * n)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def parity_ok(self) -> bool:
        return self.total % 2 == 0

    def issues(self, G: Graph) -> list[str]:
        """Human-readable reasons why no f-factor can exist (empty if none)."""
        if len(self.values) != G.n:
            return [f"degree spec has {len(self.values)} entries for {G.n} vertices"]
        out = [
            f"f({v}) = {x} exceeds degree {G.degree(v)}"
            for v, x in enumerate(self.values)
            if x > G.degree(v)
        ]
        if not self.parity_ok():
            out.append(f"sum of f is odd ({self.total})")
        return out

    def check_length(self, G: Graph) -> None:
        if len(self.values) != G.n:
            raise ValidationError(f"degree spec has {len(self.values)} entries for {G.n} vertices")


class Partition:
    """A partition of ``0..n-1`` into non-empty parts.

    Parts are kept in canonical order (by smallest element), so two partitions
    compare equal exactly when they have the same parts.
    """

    __slots__ = ("parts", "part_of")

    def __init__(self, parts: Iterable[Iterable[int]], n: int):
        frozen = [frozenset(p) for p in parts]
        if any(not p for p in frozen):
            raise ValidationError("partition parts must be non-empty")
        frozen.sort(key=min)
        part_of = [-1] * n
        for i, p in enumerate(frozen):
            for v in p:
                if not 0 <= v < n:
                    raise ValidationError(f"vertex {v} outside [0, {n})")
                if part_of[v] != -1:
                    raise ValidationError(f"vertex {v} appears in two parts")
                part_of[v] = i
        if -1 in part_of:
            raise ValidationError(f"vertex {part_of.index(-1)} is not covered")
        self.parts: tuple[frozenset[int], ...] = tuple(frozen)
        self.part_of: tuple[int, ...] = tuple(part_of)

    @classmethod
    def whole(cls, n: int) -> Partition:
        return cls([range(n)], n) if n else cls([], 0)

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls([[v] for v in range(n)], n)

    @property
    def n(self) -> int:
        return len(self.part_of)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return (
            "Partition("
            + " | ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.parts)
            + ")"
        )

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]

    def is_refinement_of(self, other: Partition) -> bool:
        if self.n != other.n:
            return False
        return all(len({other.part_of[v] for v in p}) == 1 for p in self.parts)


@dataclass(frozen=True)
class QuotientGraph:
    """The multigraph G/Q: one entry ``(i, j, e)`` per cross-part edge ``e``."""

    partition: Partition
    quotient_edges: tuple[tuple[int, int, Edge], ...]

    def __len__(self) -> int:
        return len(self.quotient_edges)


class FactorSubgraph:
    """A spanning subgraph of ``graph`` given by an edge subset."""

    __slots__ = ("graph", "edges", "degree")

    def __init__(self, graph: Graph, edges: Iterable[Edge]):
        es = frozenset(edge(*e) for e in edges)
        deg = [0] * graph.n
        for e in es:
            if e not in graph._index:
                raise ValidationError(f"edge {e} is not an edge of the host graph")
            deg[e[0]] += 1
            deg[e[1]] += 1
        self.graph = graph
        self.edges: frozenset[Edge] = es
        self.degree: tuple[int, ...] = tuple(deg)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FactorSubgraph)
            and self.edges == other.edges
            and (self.graph is other.graph or self.graph == other.graph)
        )

    def __hash__(self) -> int:
        return hash(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return edge(*e) in self.edges

    def __repr__(self) -> str:
        return f"FactorSubgraph({self.sorted_edges()})"

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def weight(self) -> Weight:
        return self.graph.total_weight(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def is_connected(self) -> bool:
        return is_connected(self.edges, self.graph.n)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def components(edges: Iterable[Edge], n: int) -> list[set[int]]:
    """Connected components of the spanning subgraph ``([0, n), edges)``,
    ordered by smallest vertex.  Isolated vertices are singleton components."""
    uf = _UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), set()).add(v)
    return sorted(groups.values(), key=min)


def is_connected(edges: Iterable[Edge], n: int) -> bool:
    return len(components(edges, n)) <= 1


def quotient(G: Graph, Q: Partition) -> QuotientGraph:
    if Q.n != G.n:
        raise ValidationError("partition and graph disagree on vertex count")
    po = Q.part_of
    qe = tuple(
        (po[u], po[v], (u, v)) if po[u] < po[v] else (po[v], po[u], (u, v))
        for u, v in G.edges
        if po[u] != po[v]
    )
    return QuotientGraph(Q, qe)


def connects(edges: Iterable[Edge], Q: Partition) -> bool:
    """True when the quotient of ``edges`` by ``Q`` is connected."""
    if len(Q) <= 1:
        return True
    uf = _UnionFind(len(Q))
    po = Q.part_of
    joined = 1
    for u, v in edges:
        if uf.union(po[u], po[v]):
            joined += 1
            if joined == len(Q):
                return True
    return False


def refine_partition(H: FactorSubgraph, Q: Partition) -> Partition:
    """Split every part of ``Q`` into the connected components of ``H`` inside it."""
    n = H.graph.n
    if Q.n != n:
        raise ValidationError("partition and subgraph disagree on vertex count")
    po = Q.part_of
    uf = _UnionFind(n)
    for u, v in H.edges:
        if po[u] == po[v]:
            uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    return Partition(groups.values(), n)


def spanning_trees(G: Graph, Q: Partition) -> Iterator[tuple[Edge, ...]]:
    """Yield every edge set of G whose quotient by Q is a spanning tree of G/Q.

    Trees come out in lexicographic order of their sorted edge ids and each
    distinct edge set is produced exactly once.  Nothing is yielded when G/Q is
    disconnected.
    """
    r = len(Q)
    if r < 2:
        raise ValidationError("spanning trees need a partition with at least two parts")
    qg = quotient(G, Q)
    cross = [(a, b, e) for a, b, e in qg.quotient_edges]
    need = r - 1
    # last position at which each part pair still occurs; used for feasibility
    last: dict[tuple[int, int], int] = {}
    for i, (a, b, _) in enumerate(cross):
        last[(a, b)] = i

    def feasible(label: list[int], start: int) -> bool:
        uf = _UnionFind(r)
        for x in range(r):
            uf.union(x, label[x])
        groups = len(set(label))
        for (a, b), i in last.items():
            if i >= start and uf.union(label[a], label[b]):
                groups -= 1
                if groups == 1:
                    return True
        return groups == 1

    label = list(range(r))
    chosen: list[Edge] = []
    if not feasible(label, 0):
        return

    def rec(start: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        for i in range(start, len(cross)):
            a, b, e = cross[i]
            la, lb = label[a], label[b]
            if la == lb:
                continue
            saved = label[:]
            for x in range(r):
                if label[x] == lb:
                    label[x] = la
            chosen.append(e)
            yield from rec(i + 1)
            chosen.pop()
            label[:] = saved
            if not feasible(label, i + 1):
                return

    yield from rec(0)
