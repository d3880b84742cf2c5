import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from kit import PRISM_HAM, PRISM_TRIANGLES, complete, graph_and_f, prism

from cfactor import (
    BLUE,
    RED,
    ColoredSubgraph,
    FactorSubgraph,
    Graph,
    ValidationError,
    alternating_euler_tour,
    circuit_weight,
    color_difference,
    find_min_ac,
    is_alternating_circuit,
    min_ac_set,
    switching,
)
from cfactor.graph import edge
from cfactor.oracle import enumerate_f_factors

PRISM_AC = ColoredSubgraph.of(red=[(0, 2), (3, 5)], blue=[(2, 5), (0, 3)])

# two alternating 4-cycles sharing only x: x-a-y-b-x and x-c-z-d-x
X, A, Y, B, C, Z, D = range(7)
CYCLE1 = ColoredSubgraph.of(red=[(X, A), (Y, B)], blue=[(A, Y), (B, X)])
CYCLE2 = ColoredSubgraph.of(red=[(X, C), (Z, D)], blue=[(C, Z), (D, X)])
FIGURE_EIGHT = ColoredSubgraph(CYCLE1.red | CYCLE2.red, CYCLE1.blue | CYCLE2.blue)


def _check_tour(C: ColoredSubgraph, steps) -> None:
    assert len(steps) == len(C)
    assert {edge(*s) for s in steps} == C.edges
    for (x0, y0), (x1, y1) in zip(steps, steps[1:] + steps[:1]):
        assert y0 == x1
        assert C.color(edge(x0, y0)) != C.color(edge(x1, y1))


class TestColorDifference:
    def test_prism(self):
        G = prism()
        C = color_difference(FactorSubgraph(G, PRISM_TRIANGLES), FactorSubgraph(G, PRISM_HAM))
        assert C == PRISM_AC
        assert C.color((0, 2)) == RED and C.color((0, 3)) == BLUE

    def test_equal(self):
        H = FactorSubgraph(prism(), PRISM_HAM)
        assert not color_difference(H, H)

    def test_k5_disjoint_hamilton_cycles(self):
        K5 = complete(5)
        H1 = FactorSubgraph(K5, [(i, (i + 1) % 5) for i in range(5)])
        H2 = FactorSubgraph(K5, [(i, (i + 2) % 5) for i in range(5)])
        C = color_difference(H1, H2)
        assert all(C.red_degree()[v] == C.blue_degree()[v] == 2 for v in range(5))

    def test_unbalanced(self):
        G = prism()
        with pytest.raises(ValidationError):
            color_difference(FactorSubgraph(G, PRISM_TRIANGLES), FactorSubgraph(G, []))


class TestIsAlternatingCircuit:
    def test_examples(self):
        assert is_alternating_circuit(PRISM_AC)
        assert not is_alternating_circuit(ColoredSubgraph.of(red=[(0, 1)]))
        shifted = ColoredSubgraph.of(red=[(10, 12), (13, 15)], blue=[(12, 15), (10, 13)])
        union = ColoredSubgraph(PRISM_AC.red | shifted.red, PRISM_AC.blue | shifted.blue)
        assert not is_alternating_circuit(union)
        assert not is_alternating_circuit(ColoredSubgraph.of())

    def test_figure_eight(self):
        assert is_alternating_circuit(FIGURE_EIGHT)
        assert FIGURE_EIGHT.is_minimal()  # degree caps hold at x


class TestEulerTour:
    def test_prism(self):
        steps = alternating_euler_tour(PRISM_AC)
        _check_tour(PRISM_AC, steps)
        assert steps[0][0] == 0

    def test_figure_eight(self):
        _check_tour(FIGURE_EIGHT, alternating_euler_tour(FIGURE_EIGHT))

    def test_failures(self):
        assert alternating_euler_tour(ColoredSubgraph.of(red=[(0, 1)], blue=[(1, 2)])) is None
        assert alternating_euler_tour(ColoredSubgraph.of()) is None


class TestFindMinAC:
    def test_prism_already_minimal(self):
        assert find_min_ac(PRISM_AC) == PRISM_AC

    def test_figure_eight(self):
        assert find_min_ac(FIGURE_EIGHT) in (CYCLE1, CYCLE2)

    def test_six_cycle(self):
        C = ColoredSubgraph.of(red=[(0, 1), (2, 3), (4, 5)], blue=[(1, 2), (3, 4), (0, 5)])
        assert find_min_ac(C) == C

    def test_rejects_non_circuit(self):
        with pytest.raises(ValidationError):
            find_min_ac(ColoredSubgraph.of(red=[(0, 1)]))


class TestMinACSet:
    def test_figure_eight(self):
        assert min_ac_set(FIGURE_EIGHT, [(A, Y)]) == [CYCLE1]

    def test_prism(self):
        assert min_ac_set(PRISM_AC, [(0, 3)]) == [PRISM_AC]

    def test_empty(self):
        assert min_ac_set(PRISM_AC, []) == []

    def test_target_outside(self):
        with pytest.raises(ValidationError):
            min_ac_set(PRISM_AC, [(0, 1)])


class TestSwitching:
    def test_prism(self):
        G = prism()
        H = switching(FactorSubgraph(G, PRISM_TRIANGLES), PRISM_AC)
        assert H.edges == set(PRISM_HAM)

    def test_empty(self):
        H = FactorSubgraph(prism(), PRISM_TRIANGLES)
        assert switching(H, []) == H

    def test_involution(self):
        H = FactorSubgraph(prism(), PRISM_TRIANGLES)
        assert switching(switching(H, PRISM_AC), PRISM_AC.flipped()) == H

    def test_invalid(self):
        H = FactorSubgraph(prism(), PRISM_HAM)
        with pytest.raises(ValidationError):
            switching(H, PRISM_AC)
        with pytest.raises(ValidationError):
            switching(FactorSubgraph(prism(), PRISM_TRIANGLES), [PRISM_AC, PRISM_AC])


class TestCircuitWeight:
    def test_examples(self):
        unit = Graph.from_edges(6, prism().edges, [1] * 9)
        assert circuit_weight(PRISM_AC, unit) == 0
        assert circuit_weight(PRISM_AC, prism(weighted=True)) == 18
        assert circuit_weight(ColoredSubgraph.of(), prism(weighted=True)) == 0

    def test_mapping(self):
        w = {(0, 2): 1, (3, 5): 1, (2, 5): 10, (0, 3): 10}
        assert circuit_weight(PRISM_AC, w) == 18
        with pytest.raises(ValidationError):
            circuit_weight(PRISM_AC, {})


@st.composite
def balanced_colored(draw, max_n: int = 9):
    """Colored subgraph from two distinct f-factors of a random graph."""
    G, f = draw(graph_and_f(min_n=2, max_n=max_n))
    factors = list(enumerate_f_factors(G, f))
    if len(factors) < 2:
        return None, None
    i = draw(st.integers(0, len(factors) - 1))
    j = draw(st.integers(0, len(factors) - 1))
    return factors[i], factors[j]


@given(balanced_colored(max_n=7))
@settings(max_examples=200, deadline=None)
def test_circuit_properties(pair):
    H1, H2 = pair
    if H1 is None or H1 == H2:
        return
    U = color_difference(H1, H2)
    for comp in U.components():
        _check_tour(comp, alternating_euler_tour(comp))
        M = find_min_ac(comp)
        assert M.is_minimal() and M.red <= comp.red and M.blue <= comp.blue
        assert is_alternating_circuit(M)
    S = sorted(U.edges)[: max(1, len(U) // 3)]
    circuits = min_ac_set(U, S)
    covered = set()
    for c in circuits:
        assert not covered & c.edges
        covered |= c.edges
        assert c.is_minimal() and c.edges & set(S)
    assert set(S) <= covered
    H = switching(H1, circuits)
    assert H.degree == H1.degree
    # retention of neighbours under a single minimal circuit
    for c in circuits:
        Hc = switching(H1, c)
        for v in range(H1.graph.n):
            assert len(H1.neighbors(v) & Hc.neighbors(v)) >= H1.degree[v] - 2


@given(graph_and_f(min_n=2, max_n=7, weighted=True), st.data())
@settings(max_examples=150, deadline=None)
def test_weight_additivity(inst, data):
    G, f = inst
    factors = list(enumerate_f_factors(G, f))
    if len(factors) < 2:
        return
    H1, H2 = data.draw(st.sampled_from(factors)), data.draw(st.sampled_from(factors))
    U = color_difference(H1, H2)
    circuits = min_ac_set(U, U.edges)
    H = switching(H1, circuits)
    assert H == H2
    assert H.weight() == H1.weight() + sum(circuit_weight(c, G) for c in circuits)


def test_unbalanced_components_have_no_tour():
    rng = random.Random(8)
    for _ in range(300):
        es = {edge(*rng.sample(range(7), 2)) for _ in range(rng.randint(1, 10))}
        red = {e for e in es if rng.random() < 0.5}
        C = ColoredSubgraph(frozenset(red), frozenset(es - red))
        for comp in C.components():
            assert (alternating_euler_tour(comp) is not None) == comp.is_balanced()
