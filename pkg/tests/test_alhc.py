import pytest

from blbetti.alhc import (
    alhc_bl_closed,
    alhc_blcomp_closed,
    alhc_from_betti,
    is_alhc,
    psi_inverse,
    psi_matrix,
    xi_structures,
)
from blbetti.betti import betti_bl_closed, betti_blcomp_closed, betti_oracle
from blbetti.booth_lueker import bl
from blbetti.errors import ApplicabilityError, InconsistencyError
from blbetti.exact_math import is_identity, matmul
from blbetti.graphs import Graph, all_graphs, degree_vector

from conftest import FIG2_OMEGA

FIG2_LAMBDA = (1, 2, 3, 4, 5, 6, 7, 7, 2, 0, 0, 0, 0, 0)


def test_is_alhc():
    assert is_alhc(FIG2_LAMBDA, 1)
    assert not is_alhc((2, 1), 1)
    assert not is_alhc((1, 3), 1)
    assert not is_alhc((1, -1), 1)
    assert is_alhc((), 1)
    assert is_alhc((2, 3), 2)


def test_psi():
    assert psi_matrix(3) == [[1, 0, 0], [1, 1, 0], [1, 2, 1]]
    for size in (1, 3, 14, 30):
        assert is_identity(matmul(psi_matrix(size), psi_inverse(size)))


def test_xi_displays_for_example():
    xa, xv = xi_structures(7, 8)
    assert xa == [[1 if j <= k + 5 else 0 for k in range(1, 8)] for j in range(1, 15)]
    assert xv == [6, 5, 4, 3, 2, 1] + [0] * 8


@pytest.mark.parametrize("n", range(2, 9))
def test_xi_structure_general(n):
    for m in (n - 1, n, n + 2):
        xa, xv = xi_structures(n, m)
        assert xa == [[1 if j <= k + n - 2 else 0 for k in range(1, n + 1)] for j in range(1, n + m)]
        assert xv == [max(n - j, 0) for j in range(1, n + m)]


def test_alhc_from_betti_examples():
    assert alhc_from_betti(FIG2_OMEGA) == FIG2_LAMBDA
    assert alhc_from_betti((14, 36, 39, 20, 4, 0, 0)) == (1, 2, 3, 4, 4, 0, 0)
    assert alhc_from_betti((0, 0, 0)) == (0, 0, 0)
    with pytest.raises(InconsistencyError):
        alhc_from_betti((2, 0))


def test_alhc_bl_closed_examples():
    lam = alhc_bl_closed((0, 0, 5, 2, 0, 0, 0), 8)
    assert lam == FIG2_LAMBDA
    assert lam[7] == 5 + 2 and lam[8] == 2
    assert alhc_bl_closed((0, 0, 4, 0), 4) == (1, 2, 3, 4, 4, 0, 0)
    with pytest.raises(ApplicabilityError):
        alhc_bl_closed((1, 4, 0, 0, 0), 2)


def test_lambda_n_is_n_minus_isolated_vertices():
    # triangle plus an isolated vertex, m = n - 1: lambda_n = n - d_0 = 3, not n
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
    d = degree_vector(g)
    lam = alhc_bl_closed(d, g.m)
    assert lam == alhc_from_betti(betti_oracle(bl(g).underlying)) == (1, 2, 3, 3, 3, 0)
    assert lam[3] == 4 - d[0]


def test_alhc_bl_closed_matches_matrix_route():
    for n in range(1, 6):
        for g in all_graphs(n):
            if g.m < n - 1:
                continue
            d = degree_vector(g)
            lam = alhc_bl_closed(d, g.m)
            assert lam == alhc_from_betti(betti_bl_closed(d, g.m))
            assert is_alhc(lam, 1)
            if n >= 2:
                assert lam[0] == 1
                assert lam[n - 1] == n - d[0]


def test_alhc_blcomp_closed_examples():
    assert alhc_blcomp_closed(4, 3) == (1, 2, 3, 3, 0, 0)
    assert alhc_blcomp_closed(5, 0) == (0, 0, 0, 0)
    assert alhc_blcomp_closed(3, 5) == (1, 2, 3, 4, 5, 0, 0) == alhc_from_betti(betti_blcomp_closed(3, 5))
    with pytest.raises(ApplicabilityError):
        alhc_blcomp_closed(2, 2)


def test_alhc_blcomp_closed_grid():
    for n in range(3, 9):
        for m in range(0, 11):
            lam = alhc_blcomp_closed(n, m)
            assert lam == alhc_from_betti(betti_blcomp_closed(n, m))
            assert is_alhc(lam, 1)
            if m >= 1:
                assert lam[0] == 1
