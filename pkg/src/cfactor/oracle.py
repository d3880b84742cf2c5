"""Brute-force ground truth for small instances."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from cfactor.graph import DegreeSpec, FactorSubgraph, Graph, Weight, is_connected

log = logging.getLogger(__name__)

EDGE_SOFT_LIMIT = 24
HAMILTON_SOFT_LIMIT = 12


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    best: tuple[FactorSubgraph, Weight | None] | None
    count: int


def enumerate_f_factors(
    G: Graph, f: DegreeSpec | Sequence[int], connected_only: bool = False
) -> Iterator[FactorSubgraph]:
    """Yield every f-factor of ``G`` (optionally only connected ones) once.

    Edges are decided in id order; a branch is cut as soon as some vertex can
    no longer reach its target with the edges still undecided.
    """
    f = tuple(f)
    if len(f) != G.n:
        raise ValueError("degree spec length differs from vertex count")
    if G.m > EDGE_SOFT_LIMIT:
        log.warning("enumerating f-factors over %d edges (soft limit %d)", G.m, EDGE_SOFT_LIMIT)
    deficit = list(f)
    remaining = G.degrees()
    if any(deficit[v] > remaining[v] for v in range(G.n)) or sum(f) % 2:
        return
    edges = G.edges
    m = len(edges)
    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[FactorSubgraph]:
        if i == m:
            if connected_only and not is_connected(chosen, G.n):
                return
            yield FactorSubgraph(G, chosen)
            return
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        if deficit[u] and deficit[v]:
            deficit[u] -= 1
            deficit[v] -= 1
            chosen.append((u, v))
            if deficit[u] <= remaining[u] and deficit[v] <= remaining[v]:
                yield from rec(i + 1)
            chosen.pop()
            deficit[u] += 1
            deficit[v] += 1
        if deficit[u] <= remaining[u] and deficit[v] <= remaining[v]:
            yield from rec(i + 1)
        remaining[u] += 1
        remaining[v] += 1

    yield from rec(0)


def brute_force_connected_f_factor(
    G: Graph, f: DegreeSpec | Sequence[int], w: Sequence[Weight] | None = None
) -> OracleResult:
    """Fold over all connected f-factors, keeping the lightest when weighted."""
    if w is not None:
        G = G.with_weights(w)
    best = None
    best_w = None
    count = 0
    for H in enumerate_f_factors(G, f, connected_only=True):
        count += 1
        if G.weighted:
            hw = H.weight()
            if best is None or hw < best_w:
                best, best_w = H, hw
        elif best is None:
            best = H
    if best is None:
        return OracleResult(False, None, 0)
    return OracleResult(True, (best, best_w), count)


def has_connected_f_factor(G: Graph, f: DegreeSpec | Sequence[int]) -> bool:
    """Existence only; stops at the first connected f-factor."""
    return next(enumerate_f_factors(G, f, connected_only=True), None) is not None


def has_hamiltonian_cycle(G: Graph) -> bool:
    """Bitmask dynamic program over paths that start at vertex 0."""
    n = G.n
    if n < 3:
        return False
    if n > HAMILTON_SOFT_LIMIT:
        log.warning("Hamiltonian search on %d vertices (soft limit %d)", n, HAMILTON_SOFT_LIMIT)
    nbr = [0] * n
    for u, v in G.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    full = (1 << n) - 1
    # ends[mask]: bitset of endpoints v such that a path 0 -> v covers exactly mask
    ends = [0] * (1 << n)
    ends[1] = 1
    for mask in range(1, full + 1, 2):
        e = ends[mask]
        if not e:
            continue
        x = e
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            free = nbr[v] & ~mask
            while free:
                b = free & -free
                free ^= b
                ends[mask | b] |= b
    return bool(ends[full] & nbr[0])
