from itertools import combinations

import pytest

from blbetti.betti import betti_oracle
from blbetti.booth_lueker import (
    bl,
    bl_complement,
    complement_matches,
    move_edge,
    pineapple,
    toward_pineapple,
    valid_moves,
)
from blbetti.errors import GraphError
from blbetti.graphs import Graph, MultiGraph, all_graphs, complete_graph, empty_graph, path_graph


def test_bl_of_path_p4():
    b = bl(path_graph(4))
    assert b.underlying.n == 7 and b.underlying.m == 12
    b.check()
    # right vertices in sorted edge order: 4 <- 01, 5 <- 12, 6 <- 23
    assert b.provenance == ((0, 1), (1, 2), (2, 3))
    assert {(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6)} <= b.underlying.edges


def test_bl_of_edgeless_is_complete():
    assert bl(empty_graph(5)).underlying == complete_graph(5)


def test_bl_of_pineapple_8_4():
    b = bl(pineapple(8, 4))
    b.check()
    g = b.underlying
    assert g.n == 12 and g.m == 28 + 8
    assert all(g.adjacency[8 + k] == 0b11 for k in range(4))


def test_bl_invariants_up_to_seven_vertices():
    import random
    rng = random.Random(0)
    corpus = [g for n in range(1, 6) for g in all_graphs(n)]
    for n in (6, 7):
        pairs = list(combinations(range(n), 2))
        corpus += [Graph(n, frozenset(p for p in pairs if rng.random() < 0.5)) for _ in range(60)]
    for g in corpus:
        b = bl(g)
        b.check()
        assert b.underlying.m == g.n * (g.n - 1) // 2 + 2 * g.m
        right = (1 << b.underlying.n) - (1 << g.n)
        assert all(b.underlying.adjacency[r] & right == 0 for r in range(g.n, b.underlying.n))


def test_bl_complement_single_edge():
    g = Graph(6, frozenset({(2, 4)}))
    co = bl_complement(g)
    # right vertex 6 is the centre of a star on the four other left vertices; 2 and 4 isolated
    assert co.edges == {(w, 6) for w in (0, 1, 3, 5)}
    assert co.adjacency[2] == co.adjacency[4] == 0


def test_bl_complement_small_examples():
    assert bl_complement(empty_graph(4)) == empty_graph(4)
    assert bl_complement(path_graph(4)).m == 9
    assert complement_matches(path_graph(4))


def test_bl_complement_structure():
    # left part independent; right part a clique; right vertex of uv sees the n-2 others
    g = MultiGraph(5, ((0, 1), (0, 1), (2, 3)))
    co = bl_complement(g)
    assert complement_matches(g)
    left = (1 << 5) - 1
    assert all(co.adjacency[u] & left == 0 for u in range(5))
    for k, (u, v) in enumerate(g.edges):
        r = 5 + k
        assert co.adjacency[r] & left == left & ~(1 << u) & ~(1 << v)
        assert all(co.has_edge(r, 5 + k2) for k2 in range(3) if k2 != k)


def test_pineapple():
    assert pineapple(8, 4).edges == ((0, 1),) * 4
    assert pineapple(5, 0).edges == ()
    assert pineapple(2, 3) == MultiGraph(2, ((0, 1),) * 3)
    with pytest.raises(GraphError):
        pineapple(1, 1)


def test_move_edge_examples():
    tri = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
    assert sorted(move_edge(tri, 0, 1, 2).edges) == [(0, 2), (0, 2), (1, 2)]
    assert sorted(move_edge(pineapple(4, 2), 0, 1, 2).edges) == [(0, 1), (0, 2)]
    assert sorted(move_edge(MultiGraph(3, ((0, 1), (0, 1))), 0, 1, 2).edges) == [(0, 1), (0, 2)]


def test_move_edge_errors():
    g = MultiGraph(4, ((0, 1),))
    with pytest.raises(GraphError):
        move_edge(g, 0, 2, 3)
    with pytest.raises(GraphError):
        move_edge(g, 0, 1, 1)


def test_valid_moves_all_accepted():
    g = MultiGraph(4, ((0, 1), (0, 1), (2, 3)))
    moves = valid_moves(g)
    assert len(moves) == 2 * 2 * 2
    for u, v, w in moves:
        assert move_edge(g, u, v, w).m == 3


def test_chain_reaches_pineapple_with_constant_betti():
    g = MultiGraph(5, ((1, 2), (2, 3), (3, 4), (1, 4), (0, 3)))
    chain = toward_pineapple(g)
    assert sorted(chain[-1].edges) == [(0, 1)] * 5
    values = {betti_oracle(bl_complement(step)) for step in chain}
    assert len(values) == 1
