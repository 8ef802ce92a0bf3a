"""Betti vectors of 2-linear edge ideals.

Two independent routes are provided:

* :func:`betti_oracle` sums ``components - 1`` over all vertex subsets of the
  complement graph (valid whenever that complement is chordal);
* closed forms in terms of the degree vector (BL side) or of (n, m) only
  (complement side).

A Betti vector is a tuple ``(beta_{1,2}, beta_{2,3}, ...)``; position 0 holds
beta_{1,2}. BL-side vectors are padded with zeros to length n + m - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ApplicabilityError, InconsistencyError, VerificationError
from .exact_math import Matrix, Number, binomial, inverse, matvec, normalize
from .graphs import Graph, complement, is_chordal

BettiVector = tuple[int, ...]

ORACLE_MAX_VERTICES = 24


@dataclass(frozen=True)
class OracleTallies:
    """Per subset size k: how many subsets, and their total number of components."""

    subsets_by_size: tuple[int, ...]
    components_by_size: tuple[int, ...]


def component_tallies(graph: Graph, *, max_vertices: int = ORACLE_MAX_VERTICES) -> OracleTallies:
    """Count connected components of graph[W] for every vertex subset W.

    Subsets are bitmasks in a numpy array. The component of the lowest vertex
    of every W is grown in parallel; then ``comp(W) = 1 + comp(W minus that
    component)`` is filled in by increasing subset size.
    """
    N = graph.n
    if N > max_vertices:
        raise ApplicabilityError(
            f"subset enumeration is capped at {max_vertices} vertices, graph has {N}")
    if N > 31:
        raise ApplicabilityError("bitmask oracle supports at most 31 vertices")
    size = 1 << N
    masks = np.arange(size, dtype=np.uint32)
    nbr = np.zeros(size, dtype=np.uint32)
    popcount = np.zeros(size, dtype=np.uint8)
    for k, adj in enumerate(graph.adjacency):
        lo, hi = 1 << k, 1 << (k + 1)
        np.bitwise_or(nbr[:lo], np.uint32(adj), out=nbr[lo:hi])
        np.add(popcount[:lo], np.uint8(1), out=popcount[lo:hi])

    grown = masks & (~masks + np.uint32(1))  # lowest set bit, 0 for the empty set
    while True:
        nxt = (grown | nbr[grown]) & masks
        if np.array_equal(nxt, grown):
            break
        grown = nxt
    rest = masks & ~grown

    comps = np.zeros(size, dtype=np.uint8)
    order = np.argsort(popcount, kind="stable")
    bounds = np.concatenate(([0], np.cumsum(np.bincount(popcount, minlength=N + 1))))
    for k in range(1, N + 1):
        idx = order[bounds[k]:bounds[k + 1]]
        comps[idx] = comps[rest[idx]] + 1

    hist = np.bincount(popcount.astype(np.int64) * (N + 1) + comps,
                       minlength=(N + 1) ** 2).reshape(N + 1, N + 1)
    weights = np.arange(N + 1, dtype=np.int64)
    return OracleTallies(
        tuple(int(x) for x in hist.sum(axis=1)),
        tuple(int(x) for x in hist @ weights),
    )


def betti_oracle(graph: Graph, *, max_vertices: int = ORACLE_MAX_VERTICES,
                 check_chordal: bool = True) -> BettiVector:
    """Betti vector of the edge ideal of ``graph`` by subset enumeration.

    beta_{i,i+1} = sum over (i+1)-subsets W of (#components of complement(graph)[W] - 1).
    Returned with length |V| - 1.
    """
    if graph.n > max_vertices:
        raise ApplicabilityError(
            f"subset enumeration is capped at {max_vertices} vertices, graph has {graph.n}")
    co = complement(graph)
    if check_chordal and not is_chordal(co):
        raise ApplicabilityError(
            "edge ideal is not 2-linear: the complement of the graph is not chordal")
    tallies = component_tallies(co, max_vertices=max_vertices)
    N = graph.n
    return tuple(tallies.components_by_size[i + 1] - tallies.subsets_by_size[i + 1]
                 for i in range(1, N))


def stat_matrix_A(n: int, m: int) -> Matrix:
    """(n+m-1) x n matrix with (1-indexed) entries A_ij = C(j+n-2, i)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [[binomial(j + n - 2, i) for j in range(1, n + 1)] for i in range(1, n + m)]


def stat_vector_v(n: int, m: int) -> list[int]:
    """Length n+m-1 vector with (1-indexed) entries v_i = C(n, i+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [binomial(n, i + 1) for i in range(1, n + m)]


def check_degree_vector(d: Sequence[int], m: int) -> None:
    n = len(d)
    if n < 1:
        raise InconsistencyError("degree vector must have at least one entry")
    if any(x < 0 for x in d):
        raise InconsistencyError("degree vector entries must be non-negative")
    if sum(d) != n:
        raise InconsistencyError(f"degree vector counts {sum(d)} vertices, expected {n}")
    if sum(i * x for i, x in enumerate(d)) != 2 * m:
        raise InconsistencyError(f"degree vector does not describe {m} edges")


def betti_bl_closed(d: Sequence[int], m: int) -> BettiVector:
    """Betti vector of BL(G) as A*d - v, from the degree vector of G."""
    d = tuple(int(x) for x in d)
    check_degree_vector(d, m)
    n = len(d)
    A = stat_matrix_A(n, m)
    v = stat_vector_v(n, m)
    omega = tuple(a - b for a, b in zip(matvec(A, d), v))
    if any(x < 0 for x in omega):
        raise VerificationError(f"negative Betti number in {omega}")
    return omega


def betti_blcomp_closed(n: int, m: int) -> BettiVector:
    """Betti vector of the complement of BL(G): m*C(m+n-3, j) - C(m, j+1), length n+m-1."""
    if n < 1 or m < 0:
        raise ApplicabilityError("need n >= 1 and m >= 0")
    if m == 0:
        return (0,) * (n - 1)
    if n < 2:
        raise ApplicabilityError("a graph with edges has at least two vertices")
    return tuple(m * binomial(m + n - 3, j) - binomial(m, j + 1) for j in range(1, n + m))


def degree_recovery_matrix(n: int, delta: int) -> Matrix:
    """Rows n-1..n+delta-1 and columns 1..delta+1 of A (1-indexed); upper unitriangular."""
    if n < 2 or not 0 <= delta <= n - 1:
        raise ValueError("need n >= 2 and 0 <= delta <= n-1")
    return [[binomial(b + n - 2, a + n - 2) for b in range(1, delta + 2)]
            for a in range(1, delta + 2)]


def signed_inverse(B: Matrix) -> Matrix:
    """(-1)^{i+j} B_ij, which is the inverse of a degree recovery matrix."""
    return [[(-1) ** (i + j) * x for j, x in enumerate(row)] for i, row in enumerate(B)]


def strip_zeros(vec: Sequence[Number]) -> tuple[Number, ...]:
    end = len(vec)
    while end and vec[end - 1] == 0:
        end -= 1
    return tuple(vec[:end])


def recover_degree_vector(omega: Sequence[int], n: int) -> tuple[int, ...]:
    """Degree vector of G from the Betti vector of BL(G) and the vertex count n.

    Only the last delta+1 possibly nonzero Betti numbers are used, where delta is
    the maximum degree. The result is checked by pushing it forward again.
    """
    omega = tuple(int(x) for x in omega)
    if n < 1:
        raise InconsistencyError("n must be >= 1")
    if n == 1:
        if any(omega):
            raise InconsistencyError("a one-vertex graph has the zero Betti vector")
        return (1,)
    if len(omega) < n - 1:
        raise InconsistencyError(f"Betti vector shorter than n-1 = {n - 1}")
    nonzero = [i for i, x in enumerate(omega, start=1) if x]
    if not nonzero:
        raise InconsistencyError("zero Betti vector cannot come from BL(G) with n >= 2")
    delta = nonzero[-1] - n + 1
    if not 0 <= delta <= n - 1:
        raise InconsistencyError(f"last nonzero Betti number at position {nonzero[-1]} "
                                 f"is impossible for {n} vertices")
    B = degree_recovery_matrix(n, delta)
    B_inv = inverse(B)
    if B_inv != signed_inverse(B):
        raise VerificationError("degree recovery matrix inverse lost its sign pattern")
    rhs = [omega[n - 2] + 1, *omega[n - 1:n + delta - 1]]
    head = [normalize(Fraction(x)) for x in matvec(B_inv, rhs)]
    if any(not isinstance(x, int) or x < 0 for x in head):
        raise InconsistencyError(f"recovered entries {head} are not non-negative integers")
    d = tuple(head) + (0,) * (n - len(head))
    if sum(d) != n or sum(i * x for i, x in enumerate(d)) % 2:
        raise InconsistencyError(f"recovered vector {d} is not a degree vector")
    m = sum(i * x for i, x in enumerate(d)) // 2
    if strip_zeros(betti_bl_closed(d, m)) != strip_zeros(omega):
        raise InconsistencyError("Betti vector is not realizable as the Betti vector of a BL graph")
    return d


@dataclass(frozen=True)
class BettiTable:
    """Betti table with rows[j][i] = beta_{i, i+j}; (0, 0) is the top-left entry."""

    rows: tuple[tuple[Number, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(normalize(Fraction(x)) for x in r) for r in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise ValueError("Betti table rows must have equal length")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("Betti table entries must be non-negative")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @classmethod
    def zeros(cls, shape: tuple[int, int]) -> "BettiTable":
        return cls(tuple((0,) * shape[1] for _ in range(shape[0])))

    @classmethod
    def from_betti_vector(cls, omega: Sequence[Number], top: Number = 1) -> "BettiTable":
        """Two-row table of a 2-linear quotient: (top, 0, ...) over (0, omega)."""
        width = len(omega) + 1
        return cls(((top,) + (0,) * (width - 1), (0, *omega)))

    def to_betti_vector(self) -> tuple[Number, ...]:
        return self.rows[1][1:] if len(self.rows) > 1 else ()

    def __getitem__(self, key: tuple[int, int]) -> Number:
        j, i = key
        return self.rows[j][i]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)
