"""Pure Betti tables and Boij-Soederberg coefficients.

For 2-linear tables the coefficients are indexed by s >= 1, the weight of the
pure table of (0, 2, 3, ..., s+1), whose second row (without its leading zero)
is ``pure_linear_vector(s)``. Coefficient vectors are tuples of Fractions with
position 0 holding c_1.
"""
from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Sequence

from .betti import BettiTable, BettiVector, check_degree_vector
from .errors import ApplicabilityError, ApplicabilityWarning, InconsistencyError
from .exact_math import Matrix, Number, binomial, vecmat

DegreeSequence = tuple[int, ...]
CoefficientVector = tuple[Fraction, ...]
Decomposition = list[tuple[DegreeSequence, Fraction]]


def _check_sequence(seq: Sequence[int]) -> DegreeSequence:
    seq = tuple(int(x) for x in seq)
    if not seq or seq[0] < 0 or any(a >= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{seq} is not a strictly increasing sequence of non-negative integers")
    return seq


def pure_entries(seq: Sequence[int]) -> list[Fraction]:
    """Nonzero entries of pi(seq): entry i sits at homological degree i, internal degree seq[i]."""
    seq = _check_sequence(seq)
    out = []
    for i, ni in enumerate(seq):
        val = Fraction(1)
        for k, nk in enumerate(seq):
            if k not in (0, i):
                val *= Fraction(abs(nk - seq[0]), abs(nk - ni))
        out.append(val)
    return out


def pure_table(seq: Sequence[int]) -> BettiTable:
    """pi(seq) laid out as a Betti table (rows indexed by internal minus homological degree)."""
    seq = _check_sequence(seq)
    entries = pure_entries(seq)
    height = max(n - i for i, n in enumerate(seq)) + 1
    rows = [[Fraction(0)] * len(seq) for _ in range(height)]
    for i, (n, val) in enumerate(zip(seq, entries)):
        rows[n - i][i] = val
    return BettiTable(tuple(tuple(r) for r in rows))


def linear_sequence(s: int) -> DegreeSequence:
    """(0, 2, 3, ..., s+1)."""
    return (0, *range(2, s + 2))


def pure_linear_vector(s: int, length: int) -> tuple[int, ...]:
    """i * C(s+1, i+1) for i = 1..s, zero padded to ``length``."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if length < s:
        raise ValueError(f"length {length} is shorter than s = {s}")
    return tuple(i * binomial(s + 1, i + 1) for i in range(1, s + 1)) + (0,) * (length - s)


def omega_matrix(size: int) -> Matrix:
    """Entry (i, j), 1-indexed, is j * C(i+1, j+1); row s is pi_s truncated."""
    if size < 1:
        raise ValueError("size must be >= 1")
    return [[j * binomial(i + 1, j + 1) for j in range(1, size + 1)] for i in range(1, size + 1)]


def omega_inverse(size: int) -> Matrix:
    """Entry (i, j), 1-indexed, is (-1)^(i-j) C(i+1, j+1) / i."""
    if size < 1:
        raise ValueError("size must be >= 1")
    return [[Fraction((-1) ** ((i - j) % 2) * binomial(i + 1, j + 1), i) for j in range(1, size + 1)]
            for i in range(1, size + 1)]


def coeffs_from_betti(omega: Sequence[Number]) -> CoefficientVector:
    """c = omega * Omega^{-1}; raises if any coefficient is negative."""
    if not omega:
        return ()
    c = tuple(Fraction(x) for x in vecmat(list(omega), omega_inverse(len(omega))))
    if any(x < 0 for x in c):
        raise InconsistencyError(f"not a valid 2-linear Betti vector: negative coefficient in {c}")
    return c


def recompose_linear(coeffs: Sequence[Number], length: int | None = None) -> tuple[Number, ...]:
    """sum_s c_s * pi_s, as a vector of the given length (default len(coeffs))."""
    length = len(coeffs) if length is None else length
    total: list[Number] = [0] * length
    for s, c in enumerate(coeffs, start=1):
        if c:
            for i, x in enumerate(pure_linear_vector(s, max(s, length))[:length]):
                total[i] += c * x
    return tuple(total)


def coeffs_bl_closed(d: Sequence[int], m: int) -> CoefficientVector:
    """Boij-Soederberg coefficients of BL(G) straight from the degree vector.

    c_{n-1} = d_0 / n, and for n-1 < j <= 2n-2
    c_j = d_{j-n+1} / j + (d_{j-n+2} + ... + d_{n-1}) / (j (j+1)),
    all other coefficients vanish. Needs m >= n; m = n-1 is accepted with an
    :class:`ApplicabilityWarning`.
    """
    d = tuple(int(x) for x in d)
    check_degree_vector(d, m)
    n = len(d)
    if m < n - 1:
        raise ApplicabilityError(
            f"closed-form coefficients need m >= n edges (got m={m}, n={n}); use coeffs_from_betti")
    if m == n - 1:
        warnings.warn(f"m = n - 1 = {m}: outside the m >= n hypothesis, relaxed bound in use",
                      ApplicabilityWarning, stacklevel=2)
    length = n + m - 1
    c = [Fraction(0)] * length
    if n >= 2:
        c[n - 2] = Fraction(d[0], n)
    for j in range(n, 2 * n - 1):
        tail = sum(d[j - n + 2:n])
        c[j - 1] = Fraction(d[j - n + 1], j) + Fraction(tail, j * (j + 1))
    return tuple(c)


def coeffs_blcomp_closed(n: int, m: int) -> CoefficientVector:
    """Coefficients of the complement of BL(G); they depend on (n, m) only.

    c_i = m / (i (i+1)) for m <= i <= m+n-4 and c_{m+n-3} = m / (m+n-3).
    """
    if m < 1 or n < 3:
        raise ApplicabilityError(
            f"closed-form complement coefficients need m >= 1 and n >= 3 (got n={n}, m={m}); "
            "use coeffs_from_betti")
    length = n + m - 1
    c = [Fraction(0)] * length
    for i in range(m, m + n - 3):
        c[i - 1] = Fraction(m, i * (i + 1))
    c[m + n - 4] = Fraction(m, m + n - 3)
    return tuple(c)


# --- generic greedy decomposition -----------------------------------------

def sequence_leq(a: DegreeSequence, b: DegreeSequence) -> bool:
    """a <= b in the partial order: b is no longer than a and dominates it entrywise."""
    return len(b) <= len(a) and all(bi >= ai for ai, bi in zip(a, b))


def _top_strand(table: list[list[Fraction]]) -> DegreeSequence | None:
    cols = len(table[0])
    degs = []
    for i in range(cols):
        j = next((r for r in range(len(table)) if table[r][i] != 0), None)
        degs.append(None if j is None else i + j)
    last = max((i for i, x in enumerate(degs) if x is not None), default=None)
    if last is None:
        return None
    seq = degs[:last + 1]
    if any(x is None for x in seq) or any(a >= b for a, b in zip(seq, seq[1:])):
        raise InconsistencyError("table not decomposable by greedy chain")
    return tuple(seq)


def decompose_table(table: BettiTable) -> Decomposition:
    """Greedy Boij-Soederberg decomposition.

    Repeatedly read the top strand (lowest nonzero entry of each column), subtract
    the largest multiple of its pure table that keeps the table non-negative, and
    stop at zero.
    """
    work = [[Fraction(x) for x in row] for row in table.rows]
    result: Decomposition = []
    if not work or not work[0]:
        return result
    while True:
        seq = _top_strand(work)
        if seq is None:
            return result
        entries = pure_entries(seq)
        c = min(work[n - i][i] / p for i, (n, p) in enumerate(zip(seq, entries)))
        if c <= 0:
            raise InconsistencyError("table not decomposable by greedy chain")
        for i, (n, p) in enumerate(zip(seq, entries)):
            work[n - i][i] -= c * p
        if result and not (sequence_leq(result[-1][0], seq) and result[-1][0] != seq):
            raise InconsistencyError("table not decomposable by greedy chain")
        result.append((seq, c))


def recompose(decomposition: Decomposition, shape: tuple[int, int]) -> BettiTable:
    """sum c * pi(seq), laid out in a table of the given (rows, columns) shape."""
    rows, cols = shape
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for seq, c in decomposition:
        for i, (n, p) in enumerate(zip(seq, pure_entries(seq))):
            if i >= cols or n - i >= rows:
                raise ValueError(f"pure table of {seq} does not fit shape {shape}")
            out[n - i][i] += c * p
    return BettiTable(tuple(tuple(r) for r in out))


def coeffs_from_decomposition(decomposition: Decomposition, length: int) -> CoefficientVector:
    """Read a decomposition of a 2-linear table back as (c_1, ..., c_length)."""
    c = [Fraction(0)] * length
    for seq, coeff in decomposition:
        s = len(seq) - 1
        if seq != linear_sequence(s) or not 1 <= s <= length:
            raise InconsistencyError(f"{seq} is not a 2-linear pure sequence within length {length}")
        c[s - 1] += coeff
    return tuple(c)


def betti_vector_to_table(omega: BettiVector) -> BettiTable:
    return BettiTable.from_betti_vector(omega)
