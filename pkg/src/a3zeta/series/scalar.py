"""One-variable constants and the two-variable Euler-Zagier / Tornheim sums.

The single-variable families (zeta, L(s, chi_4), Lerch phi(s; alpha)) come from
mpmath at the requested working precision, so no truncation happens and the
reported tail bound is zero.  The double sums are reduced to a single index
and summed directly in extended precision with an integral tail bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from ..errors import ConvergenceError, DomainError

__all__ = [
    "Precision",
    "NumericValue",
    "DEFAULT_PRECISION",
    "eval_zeta",
    "eval_L4",
    "eval_phi_alpha",
    "eval_ez2",
    "eval_tornheim",
    "integral_tail",
    "to_mpf",
]

# extended precision used by every vectorised summation
LD = np.longdouble
LD_EPS = float(np.finfo(np.longdouble).eps)


@dataclass(frozen=True)
class Precision:
    """Working precision for mpmath constants and cutoff for direct sums.

    ``tail_target`` is the truncation error that adaptive one-axis sums
    (the brute-force 2-variable sums) aim for.
    """

    significand_bits: int = 128
    cutoff: int = 400
    tail_target: float = 1e-11

    def __post_init__(self):
        if self.significand_bits < 64:
            raise DomainError("significand_bits must be >= 64")
        if self.cutoff < 16:
            raise DomainError("cutoff must be >= 16")
        if not self.tail_target > 0:
            raise DomainError("tail_target must be positive")

    def doubled(self) -> "Precision":
        return Precision(self.significand_bits, 2 * self.cutoff, self.tail_target)


DEFAULT_PRECISION = Precision()


def to_mpf(x) -> mpmath.mpf:
    """Exact conversion of a float/longdouble/Fraction into mpmath."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, np.longdouble):
        m, e = np.frexp(x)
        # 64-bit significand fits in an integer exactly
        return mpmath.ldexp(mpmath.mpf(int(np.ldexp(m, 64))), int(e) - 64)
    return mpmath.mpf(x)


def _to_mpc(z) -> mpmath.mpc:
    if isinstance(z, mpmath.mpc):
        return z
    if isinstance(z, (np.clongdouble,)):
        return mpmath.mpc(to_mpf(z.real), to_mpf(z.imag))
    if isinstance(z, (complex, np.complexfloating)):
        return mpmath.mpc(z.real, z.imag)
    return mpmath.mpc(to_mpf(z))


class NumericValue:
    """Complex value with a rigorous truncation bound and a rounding estimate."""

    __slots__ = ("value", "tail_bound", "rounding_slack")

    def __init__(self, value, tail_bound=0.0, rounding_slack=0.0):
        self.value = _to_mpc(value)
        self.tail_bound = float(tail_bound)
        self.rounding_slack = float(rounding_slack)
        if self.tail_bound < 0 or self.rounding_slack < 0:
            raise ValueError("error bounds must be non-negative")

    @property
    def error_bound(self) -> float:
        return self.tail_bound + self.rounding_slack

    @property
    def real(self) -> mpmath.mpf:
        return self.value.real

    @property
    def imag(self) -> mpmath.mpf:
        return self.value.imag

    def __complex__(self):
        return complex(self.value)

    def __add__(self, other):
        if isinstance(other, NumericValue):
            return NumericValue(
                self.value + other.value,
                self.tail_bound + other.tail_bound,
                self.rounding_slack + other.rounding_slack,
            )
        return NumericValue(self.value + _to_mpc(other), self.tail_bound, self.rounding_slack)

    __radd__ = __add__

    def __neg__(self):
        return NumericValue(-self.value, self.tail_bound, self.rounding_slack)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, NumericValue):
            return NotImplemented
        if isinstance(c, Fraction):
            c = to_mpf(c)
        elif hasattr(c, "re") and hasattr(c, "im") and not isinstance(c, (mpmath.mpc, complex)):
            c = mpmath.mpc(to_mpf(c.re), to_mpf(c.im))
        c = _to_mpc(c)
        k = float(abs(c))
        return NumericValue(self.value * c, self.tail_bound * k, self.rounding_slack * k)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Fraction):
            return self * (1 / c)
        return self * (1 / _to_mpc(c))

    def distance(self, other) -> float:
        o = other.value if isinstance(other, NumericValue) else _to_mpc(other)
        return float(abs(self.value - o))

    def agrees_with(self, other, tol: float = 0.0) -> bool:
        slack = self.error_bound + (other.error_bound if isinstance(other, NumericValue) else 0.0)
        return self.distance(other) <= tol + slack

    def __repr__(self):
        return (
            f"NumericValue({mpmath.nstr(self.value, 20)}, tail<={self.tail_bound:.3g}, "
            f"rounding<={self.rounding_slack:.3g})"
        )


def _slack(value, bits: int) -> float:
    return float(abs(value)) * 2.0 ** (8 - bits) + 2.0 ** (-bits)


def _real_arg(s, name="s") -> float:
    try:
        x = float(s)
    except TypeError as exc:
        raise DomainError(f"{name} must be real") from exc
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite")
    return x


def eval_zeta(s, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    s = _real_arg(s)
    if s <= 1:
        raise ConvergenceError(f"zeta(s) series needs s > 1, got {s}")
    with mpmath.workprec(prec.significand_bits):
        v = mpmath.zeta(mpmath.mpf(s))
    return NumericValue(v, 0.0, _slack(v, prec.significand_bits))


def eval_L4(s, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """L(s, chi_4) as the imaginary part of Li_s(i)."""
    s = _real_arg(s)
    if s <= 0:
        raise DomainError(f"L(s, chi_4) series needs s > 0, got {s}")
    with mpmath.workprec(prec.significand_bits):
        v = mpmath.im(mpmath.polylog(mpmath.mpf(s), mpmath.mpc(0, 1)))
    return NumericValue(v, 0.0, _slack(v, prec.significand_bits))


_ALPHAS = {Fraction(1, 4): mpmath.mpc(0, 1), Fraction(1, 2): mpmath.mpc(-1, 0), Fraction(3, 4): mpmath.mpc(0, -1)}


def eval_phi_alpha(s, alpha, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """Lerch series sum_{m>=1} e^{2 pi i m alpha} m^{-s} for alpha in {1/4, 1/2, 3/4}."""
    s = _real_arg(s)
    a = Fraction(alpha).limit_denominator(64) % 1
    if a not in _ALPHAS:
        raise DomainError(f"unsupported Lerch parameter {alpha}")
    if s <= 0:
        raise ConvergenceError(f"Lerch series needs s > 0, got {s}")
    with mpmath.workprec(prec.significand_bits):
        v = mpmath.polylog(mpmath.mpf(s), _ALPHAS[a])
    return NumericValue(v, 0.0, _slack(v, prec.significand_bits))


# -- direct double sums ----------------------------------------------------

def integral_tail(f, start: float) -> float:
    """Upper bound for sum_{n > start} f(n) when f is decreasing on [start, inf)."""
    with mpmath.workdps(20):
        v = mpmath.quad(f, [start, 2 * start, 16 * start, mpmath.inf])
    return float(v) * (1 + 1e-6)


def _partial_power_bound(sigma: float):
    """Majorant Z(x) >= sum_{m <= x} m^-sigma, continuous and increasing in x."""
    if sigma > 1:
        z = float(mpmath.zeta(sigma))
        return lambda x: z
    if sigma == 1:
        return lambda x: 1 + mpmath.log(x)
    if sigma >= 0:
        return lambda x: 1 + x ** (1 - sigma) / (1 - sigma)
    raise DomainError("tail bounds need non-negative exponents")


def _powers(n: int, s: float) -> np.ndarray:
    idx = np.arange(1, n + 1, dtype=LD)
    return np.power(idx, LD(-s))


def eval_ez2(s1, s2, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """sum_{m1, m2 >= 1} m1^-s1 (m1+m2)^-s2 = sum_{n>=2} n^-s2 H_{n-1}(s1)."""
    s1, s2 = _real_arg(s1, "s1"), _real_arg(s2, "s2")
    if not (s2 > 1 and s1 + s2 > 2):
        raise ConvergenceError(f"Euler-Zagier double sum diverges at ({s1}, {s2})")
    if s1 < 0:
        raise DomainError("negative first exponent is not supported")
    n = prec.cutoff * prec.cutoff
    h = np.cumsum(_powers(n, s1))
    body = _powers(n, s2)[1:] * h[:-1]
    total = np.sum(body)
    z = _partial_power_bound(s1)
    tail = integral_tail(lambda x: x ** (-s2) * z(x), n)
    return NumericValue(to_mpf(total), tail, n * LD_EPS * float(total) * 4)


def eval_tornheim(s1, s2, s3, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """sum_{m, n >= 1} m^-s1 n^-s2 (m+n)^-s3, summed along the anti-diagonals m+n = N."""
    s1, s2, s3 = (_real_arg(v, f"s{i}") for i, v in enumerate((s1, s2, s3), 1))
    if not (s1 + s3 > 1 and s2 + s3 > 1 and s1 + s2 + s3 > 2):
        raise ConvergenceError(f"Tornheim sum diverges at ({s1}, {s2}, {s3})")
    if min(s1, s2) < 0:
        raise DomainError("negative exponents are not supported")
    n = prec.cutoff * 16
    conv = np.convolve(_powers(n, s1), _powers(n, s2))[: n - 1]  # index k -> N = k + 2
    total = np.sum(conv * _powers(n + 1, s3)[1:n])
    z1, z2 = _partial_power_bound(s1), _partial_power_bound(s2)

    def majorant(x):
        return x ** (-s3) * ((x / 2) ** (-s2) * z1(x) + (x / 2) ** (-s1) * z2(x))

    tail = integral_tail(majorant, n)
    return NumericValue(to_mpf(total), tail, n * LD_EPS * float(total) * 4)
