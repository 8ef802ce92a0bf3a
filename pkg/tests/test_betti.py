import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from blbetti.betti import (
    BettiTable,
    betti_bl_closed,
    betti_blcomp_closed,
    betti_oracle,
    component_tallies,
    degree_recovery_matrix,
    recover_degree_vector,
    signed_inverse,
    stat_matrix_A,
    stat_vector_v,
)
from blbetti.booth_lueker import bl, bl_complement
from blbetti.errors import ApplicabilityError, InconsistencyError
from blbetti.exact_math import binomial, inverse, is_identity, matmul
from blbetti.graphs import (
    Graph,
    all_graphs,
    complete_graph,
    cycle_graph,
    degree_vector,
    empty_graph,
    path_graph,
)

from conftest import FIG2_OMEGA, naive_betti

EXAMPLE_A = [
    [6, 7, 8, 9, 10, 11, 12],
    [15, 21, 28, 36, 45, 55, 66],
    [20, 35, 56, 84, 120, 165, 220],
    [15, 35, 70, 126, 210, 330, 495],
    [6, 21, 56, 126, 252, 462, 792],
    [1, 7, 28, 84, 210, 462, 924],
    [0, 1, 8, 36, 120, 330, 792],
    [0, 0, 1, 9, 45, 165, 495],
    [0, 0, 0, 1, 10, 55, 220],
    [0, 0, 0, 0, 1, 11, 66],
    [0, 0, 0, 0, 0, 1, 12],
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
]


def test_oracle_example_graph(fig2):
    assert betti_oracle(bl(fig2).underlying) == FIG2_OMEGA


def test_oracle_small_cases():
    assert betti_oracle(complete_graph(4)) == (6, 8, 3) == tuple(i * binomial(4, i + 1) for i in (1, 2, 3))
    assert betti_oracle(empty_graph(5)) == (0, 0, 0, 0)
    assert betti_oracle(Graph(0)) == ()
    assert betti_oracle(Graph(1)) == ()


def test_oracle_matches_naive_enumeration():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 5)
        pairs = list(combinations(range(n), 2))
        g = Graph(n, frozenset(p for p in pairs if rng.random() < 0.5))
        for h in (bl(g).underlying, bl_complement(g)):
            assert betti_oracle(h) == naive_betti(h)


def test_oracle_rejects_non_chordal_complement():
    # the complement of C_4 is two disjoint edges (chordal) but C_4 itself is not,
    # so the edge ideal of its complement is not 2-linear
    with pytest.raises(ApplicabilityError):
        betti_oracle(Graph(4, frozenset({(0, 1), (2, 3)})))


def test_oracle_size_cap():
    with pytest.raises(ApplicabilityError):
        betti_oracle(empty_graph(25))
    with pytest.raises(ApplicabilityError):
        betti_oracle(complete_graph(6), max_vertices=5)


def test_subset_tallies_are_exhaustive():
    g = bl(cycle_graph(5)).underlying
    t = component_tallies(g)
    assert sum(t.subsets_by_size) == 2 ** g.n
    assert t.subsets_by_size == tuple(binomial(g.n, k) for k in range(g.n + 1))
    assert t.components_by_size[1] == g.n


def test_stat_matrix_example():
    assert stat_matrix_A(7, 8) == EXAMPLE_A
    assert stat_vector_v(7, 8) == [21, 35, 35, 21, 7, 1] + [0] * 8
    assert stat_matrix_A(2, 1) == [[1, 2], [0, 1]]


def test_bl_closed_examples():
    assert betti_bl_closed((0, 0, 5, 2, 0, 0, 0), 8) == FIG2_OMEGA
    assert betti_bl_closed((4, 0, 0, 0), 0) == (6, 8, 3)
    c4 = tuple(4 * binomial(5, i) - binomial(4, i + 1) for i in range(1, 8))
    assert c4 == (14, 36, 39, 20, 4, 0, 0)
    assert betti_bl_closed((0, 0, 4, 0), 4) == c4 == betti_oracle(bl(cycle_graph(4)).underlying)
    assert betti_bl_closed((1,), 0) == ()


def test_bl_closed_rejects_inconsistent_input():
    with pytest.raises(InconsistencyError):
        betti_bl_closed((0, 0, 4, 0), 3)
    with pytest.raises(InconsistencyError):
        betti_bl_closed((0, 2, 0), 1)


def test_blcomp_closed_examples():
    assert betti_blcomp_closed(4, 3) == (9, 17, 12, 3, 0, 0) == betti_oracle(bl_complement(path_graph(4)))
    assert betti_blcomp_closed(6, 0) == (0,) * 5
    for n in range(3, 9):
        star_vector = tuple(binomial(n - 2, j) for j in range(1, n + 1))
        g = Graph(n, frozenset({(0, 1)}))
        assert betti_blcomp_closed(n, 1) == star_vector == betti_oracle(bl_complement(g))


def test_recover_examples(fig2):
    assert recover_degree_vector(FIG2_OMEGA, 7) == (0, 0, 5, 2, 0, 0, 0)
    assert recover_degree_vector((6, 8, 3), 4) == (4, 0, 0, 0)
    assert recover_degree_vector((14, 36, 39, 20, 4, 0, 0), 4) == (0, 0, 4, 0)
    assert recover_degree_vector((), 1) == (1,)


def test_recover_rejects_unrealizable():
    with pytest.raises(InconsistencyError):
        recover_degree_vector((14, 36, 39, 20, 5, 0, 0), 4)
    with pytest.raises(InconsistencyError):
        recover_degree_vector((0, 0, 0), 4)
    with pytest.raises(InconsistencyError):
        recover_degree_vector((1, 0, 0, 0, 0, 0, 0, 0, 1), 3)


def test_recovery_round_trip_all_degree_vectors():
    for n in range(1, 7):
        seen = set()
        for g in all_graphs(n):
            d = degree_vector(g)
            if d in seen:
                continue
            seen.add(d)
            assert recover_degree_vector(betti_bl_closed(d, g.m), n) == d


@pytest.mark.parametrize("n", range(2, 11))
def test_recovery_matrix_inverse_sign_pattern(n):
    for delta in range(n):
        B = degree_recovery_matrix(n, delta)
        C = signed_inverse(B)
        assert is_identity(matmul(B, C))
        assert inverse(B) == C
        assert all(B[i][i] == 1 for i in range(delta + 1))
        assert all(B[i][j] == 0 for i in range(delta + 1) for j in range(i))


def test_betti_table_layout():
    t = BettiTable.from_betti_vector((3, 2))
    assert t.rows == ((1, 0, 0), (0, 3, 2))
    assert t.to_betti_vector() == (3, 2)
    assert t[1, 2] == 2
    with pytest.raises(ValueError):
        BettiTable(((1, -1),))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))))
def test_closed_forms_match_oracle_random(case):
    n, bits = case
    pairs = list(combinations(range(n), 2))
    g = Graph(n, frozenset(p for p, b in zip(pairs, bits) if b))
    assert betti_bl_closed(degree_vector(g), g.m) == betti_oracle(bl(g).underlying)
    assert betti_blcomp_closed(n, g.m) == betti_oracle(bl_complement(g))
