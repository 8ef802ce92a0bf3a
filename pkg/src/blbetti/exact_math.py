"""Exact integer/rational helpers: binomials, small dense matrices, two binomial lemmas.

Rationals are :class:`fractions.Fraction`, which is always stored reduced with a
positive denominator, so ``==`` is structural equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

ExactRational = Fraction
Number = Union[int, Fraction]
Matrix = list[list[Number]]


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 whenever b < 0 or b > a.

    Negative upper arguments are rejected.
    """
    if a < 0:
        raise ValueError(f"binomial upper argument must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def vandermonde_check(r: int, s: int, n: int) -> bool:
    """Check sum_k C(r,k) C(s,n-k) == C(r+s,n) by direct summation."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    if n < 0:
        # both sides vanish
        return True
    lhs = sum(binomial(r, k) * binomial(s, n - k) for k in range(0, n + 1))
    return lhs == binomial(r + s, n)


@dataclass(frozen=True)
class BinomialBasisPolynomial:
    """P(x) = sum_j a_j * C(x + j, j), integer-valued on the integers."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))

    @property
    def degree(self) -> int:
        """Largest j with a_j != 0; -1 for the zero polynomial."""
        for j in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[j]:
                return j
        return -1

    def __call__(self, x: int) -> int:
        total = 0
        for j, a in enumerate(self.coefficients):
            if a:
                total += a * _poly_binomial(x + j, j)
        return total


def _poly_binomial(x: int, j: int) -> int:
    # C(x, j) as the degree-j polynomial x(x-1)...(x-j+1)/j!, valid for any integer x
    num = 1
    for t in range(j):
        num *= x - t
    return num // factorial(j)


def alternating_sum(poly: BinomialBasisPolynomial, N: int) -> int:
    """sum_{i=0}^{N} (-1)^i C(N, i) P(i); vanishes when deg P < N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return sum((-1) ** i * binomial(N, i) * poly(i) for i in range(N + 1))


# --- dense exact matrices -------------------------------------------------

def identity(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(M: Sequence[Sequence[Number]]) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(X: Sequence[Sequence[Number]], Y: Sequence[Sequence[Number]]) -> Matrix:
    if not X:
        return []
    inner = len(Y)
    if any(len(row) != inner for row in X):
        raise ValueError("shape mismatch in matmul")
    cols = len(Y[0]) if Y else 0
    out = zeros(len(X), cols)
    for i, row in enumerate(X):
        acc = out[i]
        for k, x in enumerate(row):
            if x:
                yk = Y[k]
                for j in range(cols):
                    if yk[j]:
                        acc[j] += x * yk[j]
    return out


def matvec(M: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Number]:
    """M @ v for a column vector v."""
    if any(len(row) != len(v) for row in M):
        raise ValueError("shape mismatch in matvec")
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in M]


def vecmat(v: Sequence[Number], M: Sequence[Sequence[Number]]) -> list[Number]:
    """v @ M for a row vector v."""
    if len(v) != len(M):
        raise ValueError("shape mismatch in vecmat")
    cols = len(M[0]) if M else 0
    out: list[Number] = [0] * cols
    for x, row in zip(v, M):
        if x:
            for j in range(cols):
                if row[j]:
                    out[j] += x * row[j]
    return out


def normalize(value: Number) -> Number:
    """Collapse integral Fractions to int so integer results compare and print cleanly."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def inverse(M: Sequence[Sequence[Number]]) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    size = len(M)
    if any(len(row) != size for row in M):
        raise ValueError("inverse needs a square matrix")
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(M)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        if p != 1:
            work[col] = [x / p for x in work[col]]
        prow = work[col]
        for r in range(size):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], prow)]
    return [[normalize(x) for x in row[size:]] for row in work]


def is_identity(M: Sequence[Sequence[Number]]) -> bool:
    return all(M[i][j] == (1 if i == j else 0)
               for i in range(len(M)) for j in range(len(M[i]))) and all(len(r) == len(M) for r in M)
