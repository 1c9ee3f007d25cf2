"""Exact automorphism algebras of Poisson cubics on CP^2.

A holomorphic Poisson structure on CP^2 is a cubic form ``f``.  This package
computes the algebra of traceless linear vector fields annihilating ``f``,
decides whether it is reductive, classifies the cubic projectively, and
reports the resulting obstruction to constant scalar curvature generalized
Kähler structures.  All arithmetic is exact over Q.
"""

__version__ = "0.1.0"

from .curves import CurveType, SingularData, classify, normal_form, singular_data
from .errors import (
    CubicPoissonError,
    InternalInconsistencyError,
    NonHomogeneousError,
    ParseError,
    PreconditionError,
)
from .lie import (
    LieSubalgebra,
    bracket,
    center,
    derived_series,
    is_nilpotent,
    is_reductive,
    is_solvable,
    killing_form,
    lower_central_series,
    radical,
    verify_closure,
)
from .linalg import Matrix, nullspace, rank, rref, solve
from .parser import parse
from .poisson import Mode, act, action_matrix, annihilator, sl_basis, type_number
from .polynomial import HomPolynomial, ProjectiveTransform, factor_squarefree, gcd_partials
from .report import AnalysisReport, analyze

__all__ = [
    "AnalysisReport", "CubicPoissonError", "CurveType", "HomPolynomial", "InternalInconsistencyError",
    "LieSubalgebra", "Matrix", "Mode", "NonHomogeneousError", "ParseError", "PreconditionError",
    "ProjectiveTransform", "SingularData", "act", "action_matrix", "analyze", "annihilator", "bracket",
    "center", "classify", "derived_series", "factor_squarefree", "gcd_partials", "is_nilpotent",
    "is_reductive", "is_solvable", "killing_form", "lower_central_series", "normal_form", "nullspace",
    "parse", "radical", "rank", "rref", "singular_data", "sl_basis", "solve", "type_number", "verify_closure",
]
