"""Zeta-functions of the A3 weight, intermediate and root lattices.

Exact closed forms for the functional relations of SU(4), SO(6) and PU(4),
together with the numeric series engine used to check them.
"""
__version__ = "0.1.0"

from .errors import A3ZetaError, CollapseError, ConvergenceError, DomainError, SingularityError
from .exact import GaussianRational
from .lattice import LatticeLabel, TwistLabel
from .algebra import ConstantExpression, ShiftedCombination, expr_eval_numeric, specialize, t_closed
from .series import LatticeSeriesSpec, NumericValue, Precision, eval_zeta3
from .relations import (
    RelationParams,
    TheoremId,
    derive_evaluation,
    theorem_rhs,
    verify_relation,
    witten_value,
)

__all__ = [
    "__version__",
    "A3ZetaError",
    "CollapseError",
    "ConvergenceError",
    "DomainError",
    "SingularityError",
    "GaussianRational",
    "LatticeLabel",
    "TwistLabel",
    "ConstantExpression",
    "ShiftedCombination",
    "expr_eval_numeric",
    "specialize",
    "t_closed",
    "LatticeSeriesSpec",
    "NumericValue",
    "Precision",
    "eval_zeta3",
    "RelationParams",
    "TheoremId",
    "derive_evaluation",
    "theorem_rhs",
    "verify_relation",
    "witten_value",
]
