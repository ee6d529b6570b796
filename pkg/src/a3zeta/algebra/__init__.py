"""Exact symbolic layer: constants, s-shifted combinations and the T closed forms."""
from .closed_forms import (
    SUPPORTED_PAIRS,
    lambda_value,
    phi_quarter_reduce,
    phi_reduce,
    phi_value,
    quarter_index,
    specialize,
    t_closed,
    zeta_value,
)
from .expressions import (
    FAMILIES,
    ConstantExpression,
    ConstMonomial,
    ShiftedCombination,
    SymbolicCoefficient,
    normalize,
    parse_constant,
    parse_gaussian,
    parse_shifted,
)
from .numeric import expr_eval_numeric

__all__ = [
    "FAMILIES",
    "SUPPORTED_PAIRS",
    "ConstMonomial",
    "ConstantExpression",
    "ShiftedCombination",
    "SymbolicCoefficient",
    "expr_eval_numeric",
    "lambda_value",
    "normalize",
    "parse_constant",
    "parse_gaussian",
    "parse_shifted",
    "phi_quarter_reduce",
    "phi_reduce",
    "phi_value",
    "quarter_index",
    "specialize",
    "t_closed",
    "zeta_value",
]
