"""Segment and flush statistics on semistandard tableaux, and an exact
checker for the tableau form of Tokuyama's deformation of the Weyl
character formula."""

from .characters import VerificationReport, lhs, rhs, schur, schur_crosscheck, verify_identity
from .crystal import crystal_graph, e, epsilon_phi, export_graph, f
from .laurent import LaurentPoly, UniPoly
from .statistics import (
    DecoratedStatVector,
    Segment,
    StatVector,
    a_vector,
    b_vector,
    coefficient,
    coefficient_via_decorations,
    decorations,
    flush_count,
    has_gaps,
    is_strict,
    seg,
    segments,
    statistic_record,
)
from .tableaux import (
    NotSemistandardError,
    Shape,
    Tableau,
    content,
    dimension,
    enumerate_ssyt,
    highest_weight_tableau,
    is_semistandard,
    shape_from_weight,
    theta,
)

__version__ = "0.1.0"

__all__ = [
    "DecoratedStatVector",
    "LaurentPoly",
    "NotSemistandardError",
    "Segment",
    "Shape",
    "StatVector",
    "Tableau",
    "UniPoly",
    "VerificationReport",
    "a_vector",
    "b_vector",
    "coefficient",
    "coefficient_via_decorations",
    "content",
    "crystal_graph",
    "decorations",
    "dimension",
    "e",
    "enumerate_ssyt",
    "epsilon_phi",
    "export_graph",
    "f",
    "flush_count",
    "has_gaps",
    "highest_weight_tableau",
    "is_semistandard",
    "is_strict",
    "lhs",
    "rhs",
    "schur",
    "schur_crosscheck",
    "seg",
    "segments",
    "shape_from_weight",
    "statistic_record",
    "theta",
    "verify_identity",
]
