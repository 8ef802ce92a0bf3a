"""Anti-lecture-hall compositions attached to 2-linear Betti vectors.

lambda = omega * Psi^{-1} with Psi_ij = C(i-1, j-1). Compositions are tuples
of ints, position 0 holding lambda_1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .betti import check_degree_vector, stat_matrix_A, stat_vector_v
from .errors import ApplicabilityError, InconsistencyError
from .exact_math import Matrix, Number, binomial, matmul, matvec, transpose, vecmat

ALHC = tuple[int, ...]


def is_alhc(lam: Sequence[Number], t: Number = 1) -> bool:
    """t >= lam_1/1 >= lam_2/2 >= ... >= lam_L/L >= 0, compared without division."""
    lam = list(lam)
    if not lam:
        return True
    if lam[0] > t or lam[-1] < 0:
        return False
    # lam_j / j >= lam_{j+1} / (j+1)  <=>  (j+1) lam_j >= j lam_{j+1}
    return all((j + 1) * lam[j - 1] >= j * lam[j] for j in range(1, len(lam)))


def psi_matrix(size: int) -> Matrix:
    if size < 1:
        raise ValueError("size must be >= 1")
    return [[binomial(i - 1, j - 1) for j in range(1, size + 1)] for i in range(1, size + 1)]


def psi_inverse(size: int) -> Matrix:
    if size < 1:
        raise ValueError("size must be >= 1")
    return [[(-1) ** ((i + j) % 2) * binomial(i - 1, j - 1) for j in range(1, size + 1)]
            for i in range(1, size + 1)]


def xi_matrix(size: int) -> Matrix:
    """Transpose of Psi^{-1}; maps column Betti vectors to column compositions."""
    return transpose(psi_inverse(size))


def xi_structures(n: int, m: int) -> tuple[Matrix, list[int]]:
    """(Xi*A, Xi*v) for the degree-vector matrix A and shift vector v of (n, m)."""
    size = n + m - 1
    if size < 1:
        raise ValueError("n + m - 1 must be positive")
    xi = xi_matrix(size)
    return matmul(xi, stat_matrix_A(n, m)), matvec(xi, stat_vector_v(n, m))


def alhc_from_betti(omega: Sequence[Number]) -> ALHC:
    if not omega:
        return ()
    lam = vecmat(list(omega), psi_inverse(len(omega)))
    if any(Fraction(x).denominator != 1 for x in lam):
        raise InconsistencyError("not a 2-linear Betti vector: non-integral composition")
    lam = tuple(int(x) for x in lam)
    if not is_alhc(lam, 1):
        raise InconsistencyError(f"not a 2-linear Betti vector: {lam} is not an anti-lecture-hall composition")
    return lam


def alhc_bl_closed(d: Sequence[int], m: int) -> ALHC:
    """lambda_j = j for j < n, d_{j-n+1} + ... + d_{n-1} for n <= j <= 2n-2, else 0.

    At j = n the sum is n - d_0, which equals n only when G has no isolated
    vertex. Needs m >= n - 1.
    """
    d = tuple(int(x) for x in d)
    check_degree_vector(d, m)
    n = len(d)
    if m < n - 1:
        raise ApplicabilityError(
            f"closed-form composition needs m >= n-1 (got m={m}, n={n}); use alhc_from_betti")
    lam = [0] * (n + m - 1)
    for j in range(1, min(n - 1, len(lam)) + 1):
        lam[j - 1] = j
    for j in range(n, 2 * n - 1):
        lam[j - 1] = sum(d[j - n + 1:n])
    return tuple(lam)


def alhc_blcomp_closed(n: int, m: int) -> ALHC:
    """lambda_j = j for j <= m, m for m < j <= m+n-3, 0 after; length n+m-1."""
    if n < 1 or m < 0:
        raise ApplicabilityError("need n >= 1 and m >= 0")
    if m > 0 and n < 3:
        # at n = 2 the complement of BL(G) is a clique on the right part and lambda_m != m
        raise ApplicabilityError(
            f"closed-form complement composition needs n >= 3 when m >= 1 (got n={n}); "
            "use alhc_from_betti")
    length = n + m - 1
    return tuple(j if j <= m else (m if j <= m + n - 3 else 0) for j in range(1, length + 1))
