"""Red/blue colored edge sets, alternating circuits and switching.

A colored subgraph whose every vertex has as many red as blue edges splits
into components that each carry a closed trail alternating in color.  The
trail is built with Tucker's method: pair red with blue edges at every vertex,
follow the pairing to get closed alternating trails, then merge trails that
share a vertex by swapping two pairs there.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from cfactor.graph import (
    Edge,
    FactorSubgraph,
    Graph,
    ValidationError,
    Weight,
    _UnionFind,
    components,
    edge,
)

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class ColoredSubgraph:
    red: frozenset[Edge]
    blue: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.red & self.blue:
            raise ValidationError("an edge cannot be both red and blue")

    @classmethod
    def of(cls, red: Iterable[Edge] = (), blue: Iterable[Edge] = ()) -> ColoredSubgraph:
        return cls(frozenset(edge(*e) for e in red), frozenset(edge(*e) for e in blue))

    @classmethod
    def relative_to(cls, H: FactorSubgraph, edges: Iterable[Edge]) -> ColoredSubgraph:
        """Color ``edges`` red where they lie in ``H`` and blue elsewhere."""
        es = {edge(*e) for e in edges}
        return cls(frozenset(es & H.edges), frozenset(es - H.edges))

    @property
    def edges(self) -> frozenset[Edge]:
        return self.red | self.blue

    def __len__(self) -> int:
        return len(self.red) + len(self.blue)

    def __bool__(self) -> bool:
        return bool(self.red or self.blue)

    def color(self, e: Edge) -> str:
        e = edge(*e)
        if e in self.red:
            return RED
        if e in self.blue:
            return BLUE
        raise KeyError(e)

    def red_degree(self) -> Counter:
        return _degree(self.red)

    def blue_degree(self) -> Counter:
        return _degree(self.blue)

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}

    def is_balanced(self) -> bool:
        return self.red_degree() == self.blue_degree()

    def is_minimal(self) -> bool:
        return all(d <= 2 for d in self.red_degree().values()) and all(
            d <= 2 for d in self.blue_degree().values()
        )

    def flipped(self) -> ColoredSubgraph:
        return ColoredSubgraph(self.blue, self.red)

    def restrict(self, edges: Iterable[Edge]) -> ColoredSubgraph:
        keep = frozenset(edges)
        return ColoredSubgraph(self.red & keep, self.blue & keep)

    def minus(self, other: ColoredSubgraph) -> ColoredSubgraph:
        return ColoredSubgraph(self.red - other.edges, self.blue - other.edges)

    def components(self) -> list[ColoredSubgraph]:
        """Edge-components (isolated vertices dropped), ordered by smallest edge."""
        es = sorted(self.edges)
        if not es:
            return []
        index = {v: i for i, v in enumerate(sorted(self.vertices()))}
        relabeled = [(index[u], index[v]) for u, v in es]
        groups = components(relabeled, len(index))
        comp_of = {}
        for gi, grp in enumerate(groups):
            for x in grp:
                comp_of[x] = gi
        buckets: dict[int, list[Edge]] = {}
        for e, (a, _) in zip(es, relabeled):
            buckets.setdefault(comp_of[a], []).append(e)
        parts = [self.restrict(b) for b in buckets.values()]
        parts.sort(key=lambda c: min(c.edges))
        return parts


def _degree(edges: Iterable[Edge]) -> Counter:
    c: Counter = Counter()
    for u, v in edges:
        c[u] += 1
        c[v] += 1
    return c


def color_difference(H1: FactorSubgraph, H2: FactorSubgraph) -> ColoredSubgraph:
    """Red: edges only in ``H1``; blue: edges only in ``H2``.

    Raises:
        ValidationError: if some vertex ends up with unequal red and blue degree
            (the two subgraphs do not share a degree sequence).
    """
    C = ColoredSubgraph(H1.edges - H2.edges, H2.edges - H1.edges)
    if not C.is_balanced():
        raise ValidationError("symmetric difference is not degree balanced")
    return C


def is_alternating_circuit(C: ColoredSubgraph) -> bool:
    if not C or not C.is_balanced():
        return False
    return len(C.components()) == 1


def _pairing(C: ColoredSubgraph) -> dict[tuple[int, Edge], Edge]:
    reds: dict[int, list[Edge]] = {}
    blues: dict[int, list[Edge]] = {}
    for e in sorted(C.red):
        for x in e:
            reds.setdefault(x, []).append(e)
    for e in sorted(C.blue):
        for x in e:
            blues.setdefault(x, []).append(e)
    mate: dict[tuple[int, Edge], Edge] = {}
    for x, rs in reds.items():
        bs = blues.get(x, [])
        if len(bs) != len(rs):
            raise ValidationError(f"vertex {x} has unequal red and blue degree")
        for r, b in zip(rs, bs):
            mate[(x, r)] = b
            mate[(x, b)] = r
    if any((x, b) not in mate for x, bl in blues.items() for b in bl):
        raise ValidationError("some vertex has unequal red and blue degree")
    return mate


def _other(e: Edge, x: int) -> int:
    return e[1] if e[0] == x else e[0]


def _walk(mate: dict[tuple[int, Edge], Edge], start: int, first: Edge) -> list[tuple[int, int]]:
    steps = []
    x, e = start, first
    while True:
        y = _other(e, x)
        steps.append((x, y))
        nxt = mate[(y, e)]
        x, e = y, nxt
        if x == start and e == first:
            return steps


def alternating_euler_tour(
    C: ColoredSubgraph, start: int | None = None
) -> list[tuple[int, int]] | None:
    """Closed trail through every edge of ``C`` with alternating colors.

    Returned as directed steps ``(x, y)``.  ``None`` when ``C`` is empty,
    unbalanced or disconnected.  The trail leaves ``start`` (default: the
    smallest vertex) through its smallest incident edge.
    """
    if not C:
        return None
    try:
        mate = _pairing(C)
    except ValidationError:
        return None
    # split into the closed trails induced by the pairing
    trail_of: dict[Edge, int] = {}
    ntrails = 0
    for e in sorted(C.edges):
        if e in trail_of:
            continue
        for x, y in _walk(mate, e[0], e):
            trail_of[edge(x, y)] = ntrails
        ntrails += 1
    uf = _UnionFind(ntrails)
    incident: dict[int, list[Edge]] = {}
    for e in sorted(C.red):
        for x in e:
            incident.setdefault(x, []).append(e)
    for x in sorted(incident):
        reds = incident[x]
        r0 = reds[0]
        for r in reds[1:]:
            if uf.find(trail_of[r0]) != uf.find(trail_of[r]):
                b0, b = mate[(x, r0)], mate[(x, r)]
                mate[(x, r0)], mate[(x, b)] = b, r0
                mate[(x, r)], mate[(x, b0)] = b0, r
                uf.union(trail_of[r0], trail_of[r])
    if len({uf.find(t) for t in range(ntrails)}) != 1:
        return None
    if start is None:
        start = min(C.vertices())
    first = min(e for e in C.edges if start in e)
    return _walk(mate, start, first)


def find_min_ac(U: ColoredSubgraph) -> ColoredSubgraph:
    """A minimal alternating circuit using only edges of ``U``.

    Raises:
        ValidationError: if ``U`` is not an alternating circuit.
    """
    if not is_alternating_circuit(U):
        raise ValidationError("input is not an alternating circuit")
    while not U.is_minimal():
        rd = U.red_degree()
        v = min(x for x, d in rd.items() if d > 2)
        U = U.restrict(_split_at(U, v, allow_whole=True))
    # degree caps hold; keep peeling proper closed sub-trails where a
    # vertex of red degree 2 allows one, so e.g. a figure-eight yields a loop
    while True:
        rd = U.red_degree()
        for v in sorted(x for x, d in rd.items() if d == 2):
            sub = _split_at(U, v, allow_whole=False)
            if sub is not None:
                U = U.restrict(sub)
                break
        else:
            return U


def _split_at(U: ColoredSubgraph, v: int, allow_whole: bool) -> list[Edge] | None:
    """Edges of a closed alternating sub-trail through ``v``.

    The tour from ``v`` returns to ``v`` at steps ``i1 < i2``.  Either of the
    first two loops closes with different colors at ``v``, or (only when
    ``allow_whole``) the prefix up to ``i2`` is taken, which is still shorter
    than the tour because ``v`` has degree at least 6.
    """
    steps = alternating_euler_tour(U, start=v)
    returns = [i for i, (_, y) in enumerate(steps) if y == v]
    i1, i2 = returns[0], returns[1]
    color = [U.color(edge(*s)) for s in steps]
    if color[0] != color[i1]:
        sub = steps[: i1 + 1]
    elif color[i1 + 1] != color[i2]:
        sub = steps[i1 + 1 : i2 + 1]
    elif allow_whole:
        sub = steps[: i2 + 1]
    else:
        return None
    return [edge(*s) for s in sub]


def min_ac_set(U: ColoredSubgraph, S: Iterable[Edge]) -> list[ColoredSubgraph]:
    """Edge-disjoint minimal alternating circuits of ``U`` that cover ``S``.

    Minimal circuits are peeled off ``U`` one at a time (each remaining
    component separately) and kept when they contain an edge of ``S``.

    Raises:
        ValidationError: if ``S`` is not contained in ``U`` or ``U`` is unbalanced.
    """
    targets = {edge(*e) for e in S}
    if not targets <= U.edges:
        raise ValidationError("edge set to cover is not contained in the circuit")
    if not U.is_balanced():
        raise ValidationError("circuit is not degree balanced")
    if not targets:
        return []
    kept: list[ColoredSubgraph] = []
    work = U.components()
    while work:
        comp = work.pop(0)
        if not comp.edges & targets:
            continue
        circuit = find_min_ac(comp)
        if circuit.edges & targets:
            kept.append(circuit)
        work.extend(comp.minus(circuit).components())
    return kept


def switching(
    H: FactorSubgraph, circuits: ColoredSubgraph | Iterable[ColoredSubgraph]
) -> FactorSubgraph:
    """Remove the red edges of the circuits from ``H`` and add the blue ones.

    Raises:
        ValidationError: if a circuit is not a switch on ``H`` or two circuits
            share an edge.
    """
    if isinstance(circuits, ColoredSubgraph):
        circuits = [circuits]
    red: set[Edge] = set()
    blue: set[Edge] = set()
    for c in circuits:
        if not c.red <= H.edges:
            raise ValidationError("a red edge of the switch is missing from the subgraph")
        if c.blue & H.edges:
            raise ValidationError("a blue edge of the switch is already in the subgraph")
        if (red | blue) & c.edges:
            raise ValidationError("switches must be edge-disjoint")
        if not c.is_balanced():
            raise ValidationError("switch is not degree balanced")
        red |= c.red
        blue |= c.blue
    return FactorSubgraph(H.graph, (H.edges - red) | blue)


def circuit_weight(C: ColoredSubgraph, w: Graph | Mapping[Edge, Weight]) -> Weight:
    """Blue weight minus red weight."""

    def wt(e: Edge) -> Weight:
        try:
            return w.weight(e) if isinstance(w, Graph) else w[e]
        except (KeyError, ValidationError):
            raise ValidationError(f"missing weight for edge {e}") from None

    return sum((wt(e) for e in C.blue), 0) - sum((wt(e) for e in C.red), 0)
