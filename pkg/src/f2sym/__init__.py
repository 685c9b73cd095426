"""Symmetric polynomials over GF(2) with the omega involution."""

from .coordinates import (MixedCoordinates, PowerSumTable, StandardForm, StandardFormSolver,
                          StandardFormTerm, evaluate_text)
from .gf2 import BitMatrix, Echelon, GradedSubspace, intersect, kernel, rref
from .involution import OmegaTable, build_omega_table, dd, norm, omega, thick_leibniz_defect
from .partitions import Partition, conjugate, enumerate_partitions
from .presentation import FPoly, Presentation, verify_presentation
from .ring import ParseError, Poly, TruncationError, parse, render
from .schur import SchurBasis, SchurExpr, mn_multiply, parse_schur, schur_in_w
from .verifier import CheckReport, GradedIdealFamily, build_graded_family

__all__ = [
    "BitMatrix", "CheckReport", "Echelon", "FPoly", "GradedIdealFamily", "GradedSubspace",
    "MixedCoordinates", "OmegaTable", "ParseError", "Partition", "Poly", "PowerSumTable",
    "Presentation", "SchurBasis", "SchurExpr", "StandardForm", "StandardFormSolver",
    "StandardFormTerm", "TruncationError", "build_graded_family", "build_omega_table",
    "conjugate", "dd", "enumerate_partitions", "evaluate_text", "intersect", "kernel",
    "mn_multiply", "norm", "omega", "parse", "parse_schur", "render", "rref", "schur_in_w",
    "thick_leibniz_defect", "verify_presentation",
]
