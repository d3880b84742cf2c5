import networkx as nx
import pytest
from hypothesis import given, settings
from kit import (
    PRISM_TRIANGLES,
    complete,
    const,
    cycle,
    graphs,
    petersen,
    prism,
    star,
    two_triangles,
)

from cfactor import (
    DegreeSpec,
    Graph,
    brute_force_connected_f_factor,
    enumerate_f_factors,
    has_connected_f_factor,
    has_hamiltonian_cycle,
)


class TestEnumerate:
    def test_k4(self):
        K4 = complete(4)
        factors = list(enumerate_f_factors(K4, const(K4, 2)))
        assert len(factors) == 3 and all(H.is_connected() for H in factors)

    def test_prism(self):
        G = prism()
        assert len(list(enumerate_f_factors(G, const(G, 2)))) == 4
        connected = list(enumerate_f_factors(G, const(G, 2), connected_only=True))
        assert len(connected) == 3
        assert set(PRISM_TRIANGLES) not in [H.edges for H in connected]

    def test_two_triangles_connected_only(self):
        G = two_triangles()
        assert list(enumerate_f_factors(G, const(G, 2), connected_only=True)) == []

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            list(enumerate_f_factors(cycle(4), [2, 2]))

    @given(graphs(max_n=7))
    @settings(max_examples=100, deadline=None)
    def test_duplicate_free(self, G):
        f = [min(2, G.degree(v)) for v in range(G.n)]
        seen = [H.edges for H in enumerate_f_factors(G, f)]
        assert len(seen) == len(set(seen))


class TestBruteForce:
    def test_prism_weighted(self):
        res = brute_force_connected_f_factor(prism(weighted=True), const(prism(), 2))
        assert res.exists and res.best[1] == 24 and res.count == 3

    def test_c6(self):
        res = brute_force_connected_f_factor(cycle(6), const(cycle(6), 2))
        assert res.exists and res.count == 1 and res.best[1] is None

    def test_triangles(self):
        assert not brute_force_connected_f_factor(two_triangles(), const(two_triangles(), 2)).exists

    def test_explicit_weights(self):
        G = cycle(4)
        assert brute_force_connected_f_factor(G, const(G, 2), [1, 2, 3, 4]).best[1] == 10


class TestHamiltonian:
    def test_examples(self):
        assert has_hamiltonian_cycle(complete(4))
        assert not has_hamiltonian_cycle(star(3))
        assert not has_hamiltonian_cycle(petersen())
        assert has_hamiltonian_cycle(prism())
        assert not has_hamiltonian_cycle(Graph.from_edges(2, [(0, 1)]))


def test_two_oracles_agree_on_all_small_graphs():
    """f = 2 everywhere: connected 2-factors are exactly Hamiltonian cycles."""
    for nxg in nx.graph_atlas_g()[1:]:
        G = Graph.from_edges(nxg.number_of_nodes(), nxg.edges())
        if G.n < 3:
            continue
        assert has_connected_f_factor(G, DegreeSpec.constant(G.n, 2)) == has_hamiltonian_cycle(G)
