"""Numeric rendering of constant and shifted expressions."""
from __future__ import annotations

import mpmath

from ..errors import DomainError
from ..series.scalar import DEFAULT_PRECISION, NumericValue, Precision, eval_L4, eval_zeta, to_mpf
from .expressions import ConstantExpression, ShiftedCombination

__all__ = ["expr_eval_numeric"]


def _gauss(c) -> mpmath.mpc:
    return mpmath.mpc(to_mpf(c.re), to_mpf(c.im))


def _factor(family: str, arg, prec: Precision) -> NumericValue:
    return eval_zeta(arg, prec) if family == "zeta" else eval_L4(arg, prec)


def _scaled(term: NumericValue, coeff: mpmath.mpc, bits: int) -> NumericValue:
    v = term.value * coeff
    k = float(abs(coeff))
    return NumericValue(v, term.tail_bound * k, term.rounding_slack * k + float(abs(v)) * 2.0 ** (4 - bits))


def expr_eval_numeric(e, s0=None, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """Evaluate ``e`` numerically; shifted combinations need the real point ``s0``."""
    bits = prec.significand_bits
    total = NumericValue(0)
    with mpmath.workprec(bits + 16):
        pi = +mpmath.pi
        if isinstance(e, ConstantExpression):
            for mono, c in e.items():
                term = NumericValue(1)
                for family, arg in mono.factors:
                    f = _factor(family, arg, prec)
                    term = NumericValue(term.value * f.value, 0.0,
                                        abs(term.value) * f.rounding_slack + term.rounding_slack * abs(f.value))
                total = total + _scaled(term, _gauss(c) * pi ** mono.pi_pow, bits)
            return total
        if isinstance(e, ShiftedCombination):
            if s0 is None:
                raise DomainError("a shifted combination needs a value for s")
            s = mpmath.mpf(float(s0))
            u = mpmath.power(2, -s)
            for (family, k), coeff in e.items():
                c = mpmath.fsum(_gauss(g) * pi ** a * u ** b for (a, b), g in coeff.items())
                total = total + _scaled(_factor(family, s + k, prec), c, bits)
            return total
    raise DomainError(f"cannot evaluate {type(e).__name__}")
