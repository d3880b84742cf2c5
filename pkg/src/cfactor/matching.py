"""Matching engines for general graphs.

``max_cardinality_matching`` is Edmonds' blossom-shrinking algorithm on plain
adjacency arrays.  ``min_weight_perfect_matching`` is a primal-dual weighted
blossom algorithm (see :mod:`cfactor._weighted_blossom`) run on transformed
integer weights so every dual update stays exact.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from cfactor._weighted_blossom import max_weight_matching
from cfactor.graph import Edge, Graph, Weight, edge


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges of ``graph``."""

    graph: Graph
    pairs: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, e) -> bool:
        return edge(*e) in self.pairs

    def mate(self) -> list[int]:
        out = [-1] * self.graph.n
        for u, v in self.pairs:
            out[u] = v
            out[v] = u
        return out

    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.graph.n

    def weight(self) -> Weight:
        return self.graph.total_weight(self.pairs)


def _lca(a: int, b: int, base: list[int], match: list[int], parent: list[int]) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _augmenting_path(
    root: int, adj: Sequence[Sequence[int]], match: list[int]
) -> tuple[int, list[int]]:
    """BFS from ``root`` with blossom contraction.

    Returns the free endpoint of an augmenting path (or -1) together with the
    parent array that encodes the path.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _lca(v, to, base, match, parent)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def edmonds(
    n: int, adj: Sequence[Sequence[int]], *, perfect_only: bool = False
) -> list[int] | None:
    """Maximum-cardinality matching as a mate array.

    With ``perfect_only`` the search stops as soon as some vertex is proven
    to stay exposed and ``None`` is returned instead.
    """
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path(root, adj, match)
        if end == -1:
            if perfect_only:
                return None
            continue
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
    return match


def max_cardinality_matching(G: Graph) -> Matching:
    adj = [G.neighbors(v) for v in range(G.n)]
    mate = edmonds(G.n, adj)
    return Matching(G, frozenset(edge(u, v) for u, v in enumerate(mate) if v > u))


def _integer_costs(weights: Sequence[Weight]) -> list[int]:
    den = 1
    for w in weights:
        if isinstance(w, Fraction):
            den = lcm(den, w.denominator)
    return [int(w * den) for w in weights]


def min_weight_perfect_matching(G: Graph) -> Matching | None:
    """Minimum-weight perfect matching, or ``None`` if none exists.

    Unweighted graphs are treated as all-zero weights.
    """
    if G.n % 2:
        return None
    if G.n == 0:
        return Matching(G, frozenset())
    weights = G.weights if G.weights is not None else (0,) * G.m
    cost = _integer_costs(weights)
    # maximizing (top - cost) over maximum-cardinality matchings minimizes cost
    top = max(cost, default=0) + 1
    mate = max_weight_matching(
        G.n, [(u, v, top - c) for (u, v), c in zip(G.edges, cost)], maxcardinality=True
    )
    pairs = frozenset(edge(u, v) for u, v in enumerate(mate) if v > u)
    if 2 * len(pairs) != G.n:
        return None
    return Matching(G, pairs)
