"""Reductions to the {zeta, L4, pi, u = 2^-s} basis and closed forms of T.

Every function of ``s + k`` is expressed through ``zeta(s + k)`` and
``L(s + k, chi_4)`` with coefficients polynomial in ``u``:

    phi(s + k)        = (2^{1-k} u - 1) zeta(s + k)
    phi(s + k; +-1/4) = (2^{1-2k} u^2 - 2^{-k} u) zeta(s + k) +- i L(s + k, chi_4)

The weights at integer points (zeta(2k), phi(2k), Lambda(l; +-i)) are rational
multiples of powers of pi.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import DomainError, SingularityError
from ..exact import GaussianRational, L4_odd_coefficient, zeta_even_coefficient
from .expressions import ConstantExpression, ShiftedCombination, SymbolicCoefficient

__all__ = [
    "SUPPORTED_PAIRS",
    "phi_reduce",
    "phi_quarter_reduce",
    "zeta_shift",
    "phi_value",
    "zeta_value",
    "lambda_value",
    "t_closed",
    "specialize",
    "quarter_index",
]

GR = GaussianRational


def zeta_shift(k: int) -> ShiftedCombination:
    return ShiftedCombination.single("zeta", k)


def phi_reduce(k: int) -> ShiftedCombination:
    coeff = SymbolicCoefficient({(0, 1): GR(Fraction(2) ** (1 - k)), (0, 0): GR(-1)})
    return ShiftedCombination.single("zeta", k, coeff)


def phi_quarter_reduce(k: int, sign: int) -> ShiftedCombination:
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    zc = SymbolicCoefficient({(0, 2): GR(Fraction(2) ** (1 - 2 * k)), (0, 1): GR(-Fraction(2) ** (-k))})
    lc = SymbolicCoefficient.monomial(GR(0, sign))
    return ShiftedCombination({("zeta", k): zc, ("L4", k): lc})


def zeta_value(n: int) -> ConstantExpression:
    """zeta(n) for even n >= 0 (zeta(0) = -1/2)."""
    return ConstantExpression.pi_power(n, zeta_even_coefficient(n))


def phi_value(n: int) -> ConstantExpression:
    """phi(n) = (2^{1-n} - 1) zeta(n) for even n >= 0 (phi(0) = -1/2)."""
    return ConstantExpression.pi_power(n, (Fraction(2) ** (1 - n) - 1) * zeta_even_coefficient(n))


def _sign_of(sign) -> int:
    if isinstance(sign, str):
        table = {"i": 1, "+i": 1, "-i": -1}
        if sign not in table:
            raise DomainError(f"sign must be i or -i, got {sign!r}")
        return table[sign]
    if isinstance(sign, int) and sign in (1, -1):
        return sign
    g = GR.coerce(sign) if not isinstance(sign, complex) else GR.coerce(sign)
    if g == GR(0, 1):
        return 1
    if g == GR(0, -1):
        return -1
    raise DomainError(f"sign must be i or -i, got {sign!r}")


def lambda_value(l: int, sign) -> ConstantExpression:
    """Lambda(l; +-i) = sum_{m != 0} (+-i)^m m^-l at a non-negative integer l."""
    if l < 0:
        raise DomainError("l must be non-negative")
    sg = _sign_of(sign)
    if l % 2 == 0:
        k = l // 2
        r = Fraction(2) ** (1 - 2 * k) * (Fraction(2) ** (1 - 2 * k) - 1) * zeta_even_coefficient(l)
        return ConstantExpression.pi_power(l, r)
    return ConstantExpression.pi_power(l, GR(0, 2 * sg * L4_odd_coefficient(l)))


def quarter_index(x) -> int:
    """k with x = i^k for a fourth root of unity given in any common form."""
    if isinstance(x, str):
        table = {"1": 0, "i": 1, "-1": 2, "-i": 3, "+1": 0, "+i": 1}
        if x.strip() in table:
            return table[x.strip()]
        raise DomainError(f"{x!r} is not a fourth root of unity")
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise DomainError(f"{x!r} is not a fourth root of unity")
    g = GR.coerce(x)
    for k in range(4):
        if g == GR.i_power(k):
            return k
    raise DomainError(f"{x!r} is not a fourth root of unity")


def _family(name: str, k: int) -> ShiftedCombination:
    if name == "zeta":
        return zeta_shift(k)
    if name == "phi":
        return phi_reduce(k)
    if name == "phi+":
        return phi_quarter_reduce(k, 1)
    return phi_quarter_reduce(k, -1)


# (x, y) as powers of i -> (kind, weight, first family, second family)
_TABLE = {
    (0, 0): ("even", "zeta", "zeta", "zeta"),
    (2, 0): ("even", "phi", "zeta", "phi"),
    (0, 2): ("even", "zeta", "phi", "phi"),
    (2, 2): ("even", "phi", "phi", "zeta"),
    (2, 1): ("even", "phi", "phi+", "phi-"),
    (2, 3): ("even", "phi", "phi-", "phi+"),
    (3, 2): ("lambda", -1, "phi", "phi-"),
    (3, 1): ("lambda", -1, "phi+", "phi"),
    (1, 2): ("lambda", 1, "phi", "phi+"),
    (1, 3): ("lambda", 1, "phi-", "phi"),
}
_UNITS = {0: "1", 1: "i", 2: "-1", 3: "-i"}
SUPPORTED_PAIRS = tuple((_UNITS[a], _UNITS[b]) for a, b in _TABLE)


def t_closed(p: int, s_shift: int, q: int, x, y) -> ShiftedCombination:
    """Closed form of T(p, s + s_shift, q; x, y) in the zeta/L4 basis."""
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    key = (quarter_index(x), quarter_index(y))
    if key not in _TABLE:
        raise DomainError(f"no closed form for (x, y) = ({_UNITS[key[0]]}, {_UNITS[key[1]]})")
    kind, weight, first, second = _TABLE[key]
    top = s_shift + p + q
    out = ShiftedCombination()
    if kind == "even":
        w = zeta_value if weight == "zeta" else phi_value
        for k in range(p // 2 + 1):
            c = 2 * (-1) ** p * comb(p + q - 1 - 2 * k, q - 1)
            if c:
                out = out + _family(first, top - 2 * k).scale(w(2 * k) * c)
        for k in range(q // 2 + 1):
            c = 2 * (-1) ** p * comb(p + q - 1 - 2 * k, p - 1)
            if c:
                out = out + _family(second, top - 2 * k).scale(w(2 * k) * c)
        return out
    for l in range(p + 1):
        c = (-1) ** p * (-1) ** l * comb(p + q - 1 - l, q - 1)
        if c:
            out = out + _family(first, top - l).scale(lambda_value(l, weight) * c)
    for l in range(q + 1):
        c = (-1) ** p * comb(p + q - 1 - l, p - 1)
        if c:
            out = out + _family(second, top - l).scale(lambda_value(l, weight) * c)
    return out


def specialize(c: ShiftedCombination, s0: int) -> ConstantExpression:
    """Substitute s = s0 (integer), reducing even zeta and odd L4 values to pi powers."""
    if int(s0) != s0 or s0 < 1:
        raise DomainError("s0 must be a positive integer")
    s0 = int(s0)
    u = Fraction(1, 2 ** s0)
    out = ConstantExpression()
    for (family, k), coeff in c.items():
        arg = s0 + k
        if family == "zeta" and arg <= 1:
            raise SingularityError(f"zeta({arg}) appears after setting s = {s0}")
        if family == "L4" and arg < 1:
            raise SingularityError(f"L({arg}, chi_4) appears after setting s = {s0}")
        factor = ConstantExpression.zeta(arg) if family == "zeta" else ConstantExpression.L4(arg)
        out = out + coeff.at_u(u) * factor
    return out
