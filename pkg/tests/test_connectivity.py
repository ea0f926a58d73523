from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from oracles import to_nx, vertex_connectivity_nx
import networkx as nx
from k25free.connectivity import (
    CutWitness,
    edge_connectivity,
    is_cyclically_4_edge_connected,
    is_k_connected,
    local_vertex_connectivity,
    min_vertex_cut_bruteforce,
    minimum_edge_cut,
    minimum_vertex_cut,
    vertex_connectivity,
)
from k25free.errors import CapabilityError, PreconditionError
from k25free.families import complete, complete_bipartite, cube, cycle, cycle_square, path, petersen, prism
from k25free.graph import Graph, vset


def _corpus(count: int, seed: int, max_n: int = 10):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), rng.random()) for _ in range(count)]


class TestVertexConnectivity:
    def test_examples(self):
        assert vertex_connectivity(complete(5)) == 4
        assert vertex_connectivity(cycle_square(6)) == 4
        assert vertex_connectivity(petersen()) == 3

    def test_degenerate(self):
        assert vertex_connectivity(Graph.empty(1)) == 0
        assert vertex_connectivity(Graph.empty(3)) == 0
        assert vertex_connectivity(path(2)) == 1
        with pytest.raises(PreconditionError):
            vertex_connectivity(Graph.empty(0))

    @pytest.mark.parametrize("n", range(6, 17, 2))
    def test_even_squares(self, n):
        assert vertex_connectivity(cycle_square(n)) == 4

    def test_local_requires_nonadjacent(self):
        with pytest.raises(PreconditionError):
            local_vertex_connectivity(path(3), 0, 1)
        assert local_vertex_connectivity(cycle(6), 0, 3) == 2

    def test_agrees_with_networkx(self):
        for g in _corpus(300, 11, max_n=12):
            assert vertex_connectivity(g) == vertex_connectivity_nx(g)

    def test_minimum_cut_is_valid(self):
        for g in _corpus(300, 12):
            cut = minimum_vertex_cut(g)
            if g.m == g.n * (g.n - 1) // 2:
                assert cut is None
                continue
            assert cut.is_valid(g)
            assert len(cut.members) == vertex_connectivity(g)


class TestBruteForce:
    def test_path(self):
        cut = min_vertex_cut_bruteforce(path(3), 3)
        assert cut.members == (1,)
        assert (cut.side_a, cut.side_b) == (vset([0]), vset([2]))

    def test_complete(self):
        assert min_vertex_cut_bruteforce(complete(4), 4) is None

    def test_hexagon_square(self):
        g = cycle_square(6)
        assert min_vertex_cut_bruteforce(g, 4) is None
        cut = min_vertex_cut_bruteforce(g, 5)
        assert len(cut.members) == 4 and cut.is_valid(g)
        assert CutWitness("vertex-cut", (1, 2, 4, 5), vset([0]), vset([3])).is_valid(g)

    def test_limit(self):
        with pytest.raises(CapabilityError):
            min_vertex_cut_bruteforce(Graph.empty(13), 2)

    def test_threshold_equivalence(self):
        for g in _corpus(200, 13):
            kappa = vertex_connectivity(g)
            for k in range(0, g.n + 1):
                none_below = min_vertex_cut_bruteforce(g, k) is None
                connected_enough = kappa >= k
                if g.n > k:
                    assert none_below == connected_enough
                else:
                    assert kappa <= g.n - 1


class TestIsKConnected:
    def test_matches_flow(self):
        for g in _corpus(400, 14, max_n=11):
            kappa = vertex_connectivity(g) if g.n else 0
            for k in range(0, 7):
                assert is_k_connected(g, k) == (kappa >= k and (g.n > k or k == 0))

    def test_complete_graph_convention(self):
        assert is_k_connected(complete(5), 4)
        assert not is_k_connected(complete(4), 4)


class TestEdgeConnectivity:
    def test_examples(self):
        assert edge_connectivity(cycle(5)) == 2
        assert edge_connectivity(complete(4)) == 3
        bridge = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        assert edge_connectivity(bridge) == 1
        assert minimum_edge_cut(bridge).members == ((2, 3),)

    def test_needs_two_vertices(self):
        with pytest.raises(PreconditionError):
            edge_connectivity(Graph.empty(1))

    def test_agrees_with_networkx(self):
        for g in _corpus(200, 15):
            if g.n < 2:
                continue
            assert edge_connectivity(g) == nx.edge_connectivity(to_nx(g))
            cut = minimum_edge_cut(g)
            assert cut.is_valid(g) and len(cut.members) == edge_connectivity(g)

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=2, max_n=9))
    def test_whitney_inequalities(self, g):
        kappa, lam = vertex_connectivity(g), edge_connectivity(g)
        assert kappa <= lam <= min(g.degrees())


class TestCyclicEdgeConnectivity:
    def test_k4(self):
        assert is_cyclically_4_edge_connected(complete(4)) == (True, None)

    def test_prism(self):
        ok, witness = is_cyclically_4_edge_connected(prism())
        assert not ok
        assert sorted(witness.members) == [(0, 3), (1, 4), (2, 5)]
        assert witness.is_valid(prism())

    def test_k33_and_petersen(self):
        assert is_cyclically_4_edge_connected(complete_bipartite(3, 3))[0]
        assert is_cyclically_4_edge_connected(petersen())[0]

    def test_cube(self):
        # the only cyclic edge cuts separate two opposite faces and have four edges
        assert is_cyclically_4_edge_connected(cube())[0]

    def test_low_edge_connectivity(self):
        ok, witness = is_cyclically_4_edge_connected(cycle(5))
        assert not ok and witness.kind == "edge-cut"

    def test_limit(self):
        with pytest.raises(CapabilityError):
            is_cyclically_4_edge_connected(complete(12))

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=2, max_n=8))
    def test_implies_three_edge_connected(self, g):
        if is_cyclically_4_edge_connected(g)[0]:
            assert edge_connectivity(g) >= 3


def test_cut_witness_json():
    cut = CutWitness("vertex-cut", (1,), vset([0]), vset([2]))
    assert cut.to_json() == {"kind": "vertex-cut", "members": [1], "sideA": [0], "sideB": [2]}
    assert not CutWitness("vertex-cut", (), vset([0]), vset([1])).is_valid(path(2))
