"""Betti vectors, Boij-Soederberg coefficients and anti-lecture-hall compositions
of edge ideals of Booth-Lueker graphs and their complements."""

from .alhc import alhc_bl_closed, alhc_blcomp_closed, alhc_from_betti, is_alhc
from .betti import (
    BettiTable,
    betti_bl_closed,
    betti_blcomp_closed,
    betti_oracle,
    recover_degree_vector,
)
from .boij_soderberg import (
    coeffs_bl_closed,
    coeffs_blcomp_closed,
    coeffs_from_betti,
    decompose_table,
    pure_table,
    recompose,
)
from .booth_lueker import bl, bl_complement, move_edge, pineapple
from .errors import ApplicabilityError, GraphError, InconsistencyError, VerificationError
from .graphs import Graph, MultiGraph, complement, degree_vector, is_chordal
from .invariant import Signature, Verdict, compare, signature

__all__ = [
    "ApplicabilityError", "BettiTable", "GraphError", "Graph", "InconsistencyError",
    "MultiGraph", "Signature", "Verdict", "VerificationError", "alhc_bl_closed",
    "alhc_blcomp_closed", "alhc_from_betti", "betti_bl_closed", "betti_blcomp_closed",
    "betti_oracle", "bl", "bl_complement", "coeffs_bl_closed", "coeffs_blcomp_closed",
    "coeffs_from_betti", "compare", "complement", "decompose_table", "degree_vector",
    "is_alhc", "is_chordal", "move_edge", "pineapple", "pure_table", "recompose",
    "recover_degree_vector", "signature",
]
