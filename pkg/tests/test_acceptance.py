"""Acceptance suite.

Each criterion is a function returning ``(passed, detail)``; the pytest
wrappers assert on it and the outcome is echoed as one ``PASS``/``FAIL`` line
per criterion in the terminal summary (see ``conftest.py``).  Run the file
directly to print the same lines without pytest.
"""

from __future__ import annotations

import itertools
import math
import random
import time

import networkx as nx
import pytest
from kit import (
    brute_max_matching,
    brute_min_perfect_matching,
    petersen,
    random_connected_graph,
    random_graph,
)

from cfactor import (
    ColoredSubgraph,
    DegreeSpec,
    FactorSubgraph,
    Graph,
    Partition,
    ReductionParams,
    alternating_euler_tour,
    brute_force_connected_f_factor,
    circuit_weight,
    color_difference,
    connected_f_factor,
    enumerate_f_factors,
    f_factor,
    has_connected_f_factor,
    has_hamiltonian_cycle,
    max_cardinality_matching,
    min_ac_set,
    min_connected_f_factor,
    min_weight_f_factor,
    min_weight_f_factor_with_forced,
    min_weight_perfect_matching,
    restricted_f_factor,
    switching,
    verify_reduction,
)
from cfactor.graph import edge
from cfactor.solver import SolveTrace

RESULTS: dict[str, tuple[bool, str]] = {}


def _record(key: str, title: str, passed: bool, detail: str) -> None:
    RESULTS[key] = (passed, f"{title}: {detail}")


def _atlas_connected(min_n: int, max_n: int):
    for g in nx.graph_atlas_g()[1:]:
        if min_n <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            yield Graph.from_edges(g.number_of_nodes(), g.edges())


# 1. exhaustive decision equivalence


def criterion_exhaustive() -> tuple[bool, str]:
    """All connected graphs on at most 7 vertices (one per isomorphism class)
    and every labelled f with 2 <= f(v) <= d(v)."""
    start = time.perf_counter()
    graphs = pairs = mismatches = found = 0
    for G in _atlas_connected(1, 7):
        degs = G.degrees()
        if min(degs) < 2:
            continue  # no admissible f at all
        graphs += 1
        for values in itertools.product(*(range(2, d + 1) for d in degs)):
            f = DegreeSpec(values)
            pairs += 1
            got = connected_f_factor(G, f).found
            if got != has_connected_f_factor(G, f):
                mismatches += 1
            found += got
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed <= 600
    return ok, (
        f"{pairs} (G, f) pairs over {graphs} graphs, {found} solvable, "
        f"{mismatches} mismatches, {elapsed:.0f}s (limit 600s)"
    )


# 2. f = 2 everywhere versus Hamiltonicity


def criterion_hamiltonian() -> tuple[bool, str]:
    rng = random.Random(2)
    samples = mismatches = ham = 0
    graphs = [petersen()]
    while len(graphs) < 2001:
        n = rng.randint(3, 8)
        graphs.append(random_graph(rng, n, rng.uniform(0.2, 0.9)))
    petersen_none = False
    for i, G in enumerate(graphs):
        got = connected_f_factor(G, DegreeSpec.constant(G.n, 2)).found
        want = has_hamiltonian_cycle(G)
        samples += 1
        ham += want
        mismatches += got != want
        if i == 0:
            petersen_none = not got
    ok = samples >= 2000 and mismatches == 0 and petersen_none
    return ok, (
        f"{samples} graphs (n <= 8, incl. Petersen), {ham} Hamiltonian, "
        f"{mismatches} mismatches, Petersen -> {'NONE' if petersen_none else 'FOUND'}"
    )


# 3. weighted exactness


def _weighted_instance(rng: random.Random) -> tuple[Graph, DegreeSpec]:
    while True:
        n = rng.randint(3, 8)
        low = math.ceil(n / 3)
        G = random_connected_graph(rng, n, rng.uniform(0.3, 0.8), weights=(1, 100))
        if G.m > 20:
            continue
        f = [rng.randint(min(low, d), d) for d in G.degrees()]
        if sum(f) % 2:
            # fix parity at a vertex that has room, keeping f >= ceil(n/3) when possible
            v = next((v for v in range(n) if f[v] < G.degree(v)), None)
            if v is None:
                continue
            f[v] += 1
        return G, DegreeSpec(tuple(f))


def criterion_weighted() -> tuple[bool, str]:
    rng = random.Random(3)
    total = solvable = mismatches = 0
    while solvable < 500:
        G, f = _weighted_instance(rng)
        res = min_connected_f_factor(G, f)
        truth = brute_force_connected_f_factor(G, f)
        total += 1
        if res.found != truth.exists:
            mismatches += 1
        elif truth.exists:
            solvable += 1
            if res.weight != truth.best[1]:
                mismatches += 1
    return mismatches == 0, (
        f"{total} instances, {solvable} with a connected f-factor, "
        f"{mismatches} weight or decision mismatches (tolerance 0)"
    )


# 4. recursion depth for f >= n/3


def _circulant_edges(h: int, offsets, shift: int = 0) -> set[tuple[int, int]]:
    es = set()
    for i in range(h):
        for d in offsets:
            j = (i + d) % h
            if i != j:
                es.add(edge(i + shift, j + shift))
    return es


def _two_block_instance(rng: random.Random):
    """Two circulant blocks joined by a few cross edges, plus an f-factor of
    the blocks alone (a disconnected start for the recursion)."""
    while True:
        n = rng.randrange(162, 201, 2)
        F = math.ceil(n / 3) + rng.randint(0, 2)
        h1 = rng.randrange(F + 4, n - F - 3, 2)
        h2 = n - h1
        k = F // 2 + 1 + rng.randint(0, 1)
        block = _circulant_edges(h1, range(1, k + 1)) | _circulant_edges(h2, range(1, k + 1), h1)
        cross = {edge(rng.randrange(h1), h1 + rng.randrange(h2)) for _ in range(rng.randint(2, 8))}
        G = Graph.from_edges(n, sorted(block | cross))
        f = DegreeSpec.constant(n, F)
        start = f_factor(Graph.from_edges(n, sorted(block)), f)
        if start is not None:
            return G, f, FactorSubgraph(G, start.edges)


def criterion_depth_bound() -> tuple[bool, str]:
    rng = random.Random(4)
    runs = violations = fails = 0
    worst = 0
    started = time.perf_counter()
    for _ in range(4):
        G, f, H0 = _two_block_instance(rng)
        for mode in ("solve", "split-start"):
            if mode == "solve":
                res = connected_f_factor(G, f)
                trace, found = res.trace, res.found
            else:
                trace = SolveTrace()
                found = restricted_f_factor(G, f, H0, Partition.whole(G.n), trace=trace) is not None
            runs += 1
            g = G.n / min(f)
            assert g <= 3 and G.n >= 2 * 3**4
            worst = max(worst, trace.recursive_calls)
            violations += trace.recursive_calls > 2
            fails += not found
    elapsed = time.perf_counter() - started
    return violations == 0 and fails == 0, (
        f"{runs} runs on n in [162, 200] with f >= ceil(n/3), max recursive calls {worst} "
        f"(bound 2), {violations} violations, {fails} unsolved, {elapsed:.0f}s"
    )


# 5. neighbourhood retention under one minimal circuit


def criterion_retention() -> tuple[bool, str]:
    rng = random.Random(5)
    pairs = violations = 0
    while pairs < 10_000:
        n = rng.randint(4, 9)
        G = random_graph(rng, n, rng.uniform(0.4, 0.9))
        if G.m > 22:
            continue
        f = [rng.randint(0, d) for d in G.degrees()]
        factors = list(itertools.islice(enumerate_f_factors(G, f), 60))
        if len(factors) < 2:
            continue
        for _ in range(10):
            H1, H2 = rng.sample(factors, 2)
            U = color_difference(H1, H2)
            for c in min_ac_set(U, U.edges):
                H = switching(H1, c)
                pairs += 1
                for v in range(n):
                    if len(H1.neighbors(v) & H.neighbors(v)) < H1.degree[v] - 2:
                        violations += 1
    return violations == 0, f"{pairs} (H, minimal circuit) pairs, {violations} violations"


# 6. balanced components <=> alternating Euler tour


def _valid_tour(C: ColoredSubgraph, steps) -> bool:
    if steps is None or len(steps) != len(C) or {edge(*s) for s in steps} != C.edges:
        return False
    for (x0, y0), (x1, y1) in zip(steps, steps[1:] + steps[:1]):
        if y0 != x1 or C.color(edge(x0, y0)) == C.color(edge(x1, y1)):
            return False
    return True


def _balanced_piece(rng: random.Random) -> ColoredSubgraph | None:
    """Union of edge-disjoint alternating even cycles on a small vertex pool."""
    pool = rng.randint(4, 7)
    red: set = set()
    blue: set = set()
    for _ in range(rng.randint(1, 3)):
        length = rng.choice([k for k in (4, 6) if k <= pool])
        verts = rng.sample(range(pool), length)
        cyc = [edge(verts[i], verts[(i + 1) % length]) for i in range(length)]
        if set(cyc) & (red | blue):
            continue
        red |= set(cyc[0::2])
        blue |= set(cyc[1::2])
    if not red:
        return None
    return ColoredSubgraph(frozenset(red), frozenset(blue))


def _random_colored(rng: random.Random) -> ColoredSubgraph:
    if rng.random() < 0.6:
        # disjoint balanced pieces on separate vertex ranges
        red: set = set()
        blue: set = set()
        shift = 0
        for _ in range(rng.randint(2, 4)):
            piece = _balanced_piece(rng)
            if piece is None:
                continue
            red |= {(u + shift, v + shift) for u, v in piece.red}
            blue |= {(u + shift, v + shift) for u, v in piece.blue}
            shift += 8
        if red and rng.random() < 0.3:
            e = rng.choice(sorted(red | blue))  # recolor one edge: now unbalanced
            red ^= {e}
            blue ^= {e}
        return ColoredSubgraph(frozenset(red), frozenset(blue))
    n = rng.randint(6, 12)
    es = {edge(*rng.sample(range(n), 2)) for _ in range(rng.randint(2, 14))}
    red = {e for e in es if rng.random() < 0.5}
    return ColoredSubgraph(frozenset(red), frozenset(es - red))


def criterion_euler() -> tuple[bool, str]:
    rng = random.Random(6)
    samples = balanced = mismatches = 0
    while samples < 1000:
        C = _random_colored(rng)
        comps = C.components()
        if len(comps) < 2:
            continue
        samples += 1
        all_balanced = all(c.is_balanced() for c in comps)
        tours_ok = all(_valid_tour(c, alternating_euler_tour(c)) for c in comps)
        balanced += all_balanced
        mismatches += all_balanced != tours_ok
        for c in comps:
            mismatches += c.is_balanced() != (alternating_euler_tour(c) is not None)
    return mismatches == 0, (
        f"{samples} multi-component colored subgraphs, {balanced} componentwise balanced, "
        f"{mismatches} mismatches"
    )


# 7. optimal-switch property of weighted decompositions


def criterion_optimal_switch() -> tuple[bool, str]:
    rng = random.Random(7)
    instances = circuits_seen = positive = violations = subsets = 0
    while instances < 300:
        # small weights create ties, hence zero-weight circuits away from T
        top = rng.choice((3, 100))
        G = random_connected_graph(rng, rng.randint(5, 9), rng.uniform(0.3, 0.7), weights=(1, top))
        f = DegreeSpec(tuple(rng.randint(1, d) for d in G.degrees()))
        H = min_weight_f_factor(G, f)
        if H is None:
            continue
        outside = [e for e in G.edges if e not in H.edges]
        if not outside:
            continue
        T = set(rng.sample(outside, rng.randint(1, min(5, len(outside)))))
        Hp = min_weight_f_factor_with_forced(G, f, None, T)
        if Hp is None:
            continue
        instances += 1
        U = color_difference(H, Hp)
        decomposition = min_ac_set(U, U.edges)
        for c in decomposition:
            circuits_seen += 1
            if circuit_weight(c, G) > 0:
                positive += 1
                violations += not (c.edges & T)
        for k in range(len(decomposition) + 1):
            for sub in itertools.combinations(decomposition, k):
                if T <= set().union(*(c.edges for c in sub)):
                    subsets += 1
                    violations += switching(H, sub).weight() != Hp.weight()
    return violations == 0, (
        f"{instances} instances, {circuits_seen} circuits ({positive} positive-weight), "
        f"{subsets} covering subsets switched, {violations} violations"
    )


# 8. reduction round trip


def criterion_reduction() -> tuple[bool, str]:
    started = time.perf_counter()
    params = ReductionParams(part_size_override=3)
    graphs = failures = 0
    for G in _atlas_connected(4, 6):
        graphs += 1
        failures += not verify_reduction(G, params)
    elapsed = time.perf_counter() - started
    ok = failures == 0 and elapsed <= 600
    return ok, (
        f"{graphs} connected graphs with 4 <= N <= 6, part size 3, {failures} failures, "
        f"{elapsed:.1f}s (limit 600s)"
    )


# 9. matching engines


def criterion_matching() -> tuple[bool, str]:
    rng = random.Random(9)
    samples = mismatches = perfect = 0
    for _ in range(5000):
        n = rng.randint(1, 10)
        G = random_graph(rng, n, rng.uniform(0.1, 0.9), weights=(1, 100))
        samples += 1
        if len(max_cardinality_matching(G)) != brute_max_matching(G):
            mismatches += 1
        M = min_weight_perfect_matching(G)
        best = brute_min_perfect_matching(G)
        if (M is None) != (best is None) or (M is not None and M.weight() != best):
            mismatches += 1
        perfect += best is not None
    return mismatches == 0, (
        f"{samples} random graphs (n <= 10), {perfect} with a perfect matching, "
        f"{mismatches} mismatches"
    )


CRITERIA = [
    ("1", "exhaustive decision equivalence (n <= 7)", criterion_exhaustive),
    ("2", "f = 2 matches Hamiltonicity", criterion_hamiltonian),
    ("3", "weighted exactness", criterion_weighted),
    ("4", "recursion depth <= 2 when f >= n/3", criterion_depth_bound),
    ("5", "neighbourhood retention", criterion_retention),
    ("6", "balanced <=> alternating Euler tour", criterion_euler),
    ("7", "positive circuits hit the forced set", criterion_optimal_switch),
    ("8", "reduction round trip (N <= 6)", criterion_reduction),
    ("9", "matching engines vs brute force", criterion_matching),
]


@pytest.mark.slow
@pytest.mark.parametrize("key, title, check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(key, title, check):
    passed, detail = check()
    _record(key, title, passed, detail)
    print(f"{'PASS' if passed else 'FAIL'} [{key}] {title}: {detail}")
    assert passed, detail


if __name__ == "__main__":
    for key, title, check in CRITERIA:
        passed, detail = check()
        print(f"{'PASS' if passed else 'FAIL'} [{key}] {title}: {detail}", flush=True)
