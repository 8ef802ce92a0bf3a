"""BL-Betti signatures as graph invariants.

The signature of G is determined by, and determines, the degree vector of G,
so it separates graphs exactly as well as degree statistics do and no better.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .alhc import ALHC, alhc_bl_closed, alhc_from_betti
from .betti import BettiVector, betti_bl_closed
from .boij_soderberg import CoefficientVector, coeffs_bl_closed, coeffs_from_betti
from .errors import VerificationError
from .graphs import Graph, degree_vector


class Verdict(enum.Enum):
    DISTINGUISHED = "DISTINGUISHED"
    # not "isomorphic": C_6 and two disjoint triangles share a signature
    INDISTINGUISHABLE_BY_BL_BETTI = "INDISTINGUISHABLE_BY_BL_BETTI"


@dataclass(frozen=True)
class Signature:
    n: int
    m: int
    omega: BettiVector
    coeffs: CoefficientVector
    lam: ALHC

    def check(self) -> None:
        if self.coeffs != coeffs_from_betti(self.omega) or self.lam != alhc_from_betti(self.omega):
            raise VerificationError("signature is internally inconsistent")


def signature(graph: Graph) -> Signature:
    """Betti vector, coefficients and composition of BL(graph).

    Closed forms are used where their hypotheses hold (m >= n for the
    coefficients, m >= n-1 for the composition); otherwise the matrix route.
    """
    d = degree_vector(graph)
    n, m = graph.n, graph.m
    omega = betti_bl_closed(d, m) if n else ()
    coeffs = coeffs_bl_closed(d, m) if n and m >= n else coeffs_from_betti(omega)
    lam = alhc_bl_closed(d, m) if n and m >= n - 1 else alhc_from_betti(omega)
    return Signature(n, m, omega, coeffs, lam)


def compare_signatures(a: Signature, b: Signature) -> Verdict:
    return Verdict.INDISTINGUISHABLE_BY_BL_BETTI if a == b else Verdict.DISTINGUISHED


def compare(g: Graph, h: Graph) -> Verdict:
    verdict = compare_signatures(signature(g), signature(h))
    same_degrees = g.n == h.n and degree_vector(g) == degree_vector(h)
    if (verdict is Verdict.INDISTINGUISHABLE_BY_BL_BETTI) != same_degrees:
        raise VerificationError("signature comparison disagrees with degree vector comparison")
    return verdict
