"""Numeric evaluation of the two-variable sum

    T(p, s, q; x, y) = sum_{l != 0, m >= 1, l + m != 0} x^l y^m / (l^p m^s (l+m)^q)

for unimodular x, y, straight from the definition.

For fixed m the sum over l is a rational function of l with poles at 0 and -m,
so partial fractions turn it into two-sided polylogarithms
Lambda_j(x) = sum_{l != 0} x^l / l^j minus the excluded pole terms.  This is
exact, including the conditionally convergent j = 1 pieces (symmetric
limit).  The sum over m runs directly up to the cutoff; what is left is a
finite combination of Lerch tails sum_{m > M} z^m m^-sigma, which are
evaluated exactly (Hurwitz zeta for fourth roots of unity, the Lerch
transcendent otherwise).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import mpmath
import numpy as np

from ..errors import ConvergenceError, DomainError
from ..exact import GaussianRational
from .scalar import DEFAULT_PRECISION, LD, LD_EPS, NumericValue, Precision, to_mpf

__all__ = [
    "UnitPhase",
    "as_unit",
    "two_sided_polylog",
    "lerch_tail",
    "pole_sum",
    "eval_frakT_bruteforce",
]

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class UnitPhase:
    """A point of the unit circle; ``quarter`` is set when it is exactly i^k."""

    quarter: int | None
    angle: float

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        if self.quarter is not None and other.quarter is not None:
            return UnitPhase.from_quarter(self.quarter + other.quarter)
        return UnitPhase.from_angle(self.angle + other.angle)

    def inverse(self) -> "UnitPhase":
        if self.quarter is not None:
            return UnitPhase.from_quarter(-self.quarter)
        return UnitPhase.from_angle(-self.angle)

    def __truediv__(self, other: "UnitPhase") -> "UnitPhase":
        return self * other.inverse()

    @classmethod
    def from_quarter(cls, k: int) -> "UnitPhase":
        k %= 4
        return cls(k, k * _HALF_PI)

    @classmethod
    def from_angle(cls, theta: float) -> "UnitPhase":
        theta = math.remainder(float(theta), 2 * math.pi)
        k = theta / _HALF_PI
        if abs(k - round(k)) < 1e-13:
            return cls.from_quarter(int(round(k)))
        return cls(None, theta)

    def mp(self) -> mpmath.mpc:
        if self.quarter is not None:
            return mpmath.mpc(*((1, 0), (0, 1), (-1, 0), (0, -1))[self.quarter])
        return mpmath.expjpi(mpmath.mpf(self.angle) / mpmath.pi)

    def powers(self, n: np.ndarray):
        """(re, im) longdouble arrays of self**n for an integer array n."""
        if self.quarter is not None:
            e = (self.quarter * n) % 4
            re = np.choose(e, (1, 0, -1, 0)).astype(LD)
            im = np.choose(e, (0, 1, 0, -1)).astype(LD)
            return re, im
        ang = LD(self.angle) * n.astype(LD)
        return np.cos(ang), np.sin(ang)


def as_unit(x) -> UnitPhase:
    if isinstance(x, UnitPhase):
        return x
    if isinstance(x, GaussianRational):
        x = complex(x)
    if isinstance(x, (int, float)):
        x = complex(x)
    if isinstance(x, mpmath.mpc):
        x = complex(x)
    if isinstance(x, str):
        x = complex(x.replace("i", "j"))
    if not isinstance(x, complex):
        raise DomainError(f"cannot read {x!r} as a point of the unit circle")
    if abs(abs(x) - 1) > 1e-12:
        raise DomainError(f"|{x}| != 1")
    return UnitPhase.from_angle(math.atan2(x.imag, x.real))


@lru_cache(maxsize=4096)
def _lambda_cached(j: int, quarter, angle: float, bits: int):
    with mpmath.workprec(bits + 16):
        z = UnitPhase(quarter, angle).mp()
        if quarter == 0:
            if j == 1:
                return mpmath.mpc(0)  # symmetric limit of sum 1/l
            return mpmath.mpc((1 + (-1) ** j) * mpmath.zeta(j))
        return mpmath.polylog(j, z) + (-1) ** j * mpmath.polylog(j, mpmath.conj(z))


def two_sided_polylog(j: int, x, bits: int = 128) -> mpmath.mpc:
    """Lambda_j(x) = lim_L sum_{0 < |l| <= L} x^l / l^j (integer j >= 1)."""
    if j < 1:
        raise DomainError("order must be a positive integer")
    u = as_unit(x)
    return _lambda_cached(j, u.quarter, u.angle, bits)


@lru_cache(maxsize=16384)
def _lerch_tail_cached(quarter, angle: float, sigma: float, m: int, bits: int):
    with mpmath.workprec(bits + 16):
        sig = mpmath.mpf(sigma)
        if quarter is not None:
            # split m = M + r + 4k by residue
            total = mpmath.mpc(0)
            z = UnitPhase.from_quarter(quarter).mp()
            four = mpmath.mpf(4) ** (-sig)
            for r in range(1, 5):
                total += z ** (m + r) * four * mpmath.zeta(sig, mpmath.mpf(m + r) / 4)
            return total
        z = UnitPhase(None, angle).mp()
        return z ** (m + 1) * mpmath.lerchphi(z, sig, m + 1)


def lerch_tail(z, sigma: float, m: int, bits: int = 128) -> mpmath.mpc:
    """sum_{n > m} z^n n^-sigma for unimodular z and sigma > 1."""
    if not sigma > 1:
        raise ConvergenceError("Lerch tail needs sigma > 1")
    u = as_unit(z)
    return _lerch_tail_cached(u.quarter, u.angle, float(sigma), int(m), bits)


def _two_pole_coefficients(p: int, q: int):
    """1/(l^p (l+m)^q) = sum_j a_j m^-(p+q-j) l^-j + sum_j b_j m^-(p+q-j) (l+m)^-j."""
    a = {j: (-1) ** (p - j) * comb(p + q - 1 - j, q - 1) for j in range(1, p + 1)}
    b = {j: (-1) ** p * comb(p + q - 1 - j, p - 1) for j in range(1, q + 1)}
    return a, b


def pole_sum(x, poles, bits: int = 128):
    """Vectorised sum_{l not a pole} x^l / prod_i (l - r_i)^{k_i}.

    ``poles`` is a list of (r_i, k_i) with integer arrays r_i of a common shape
    (pairwise distinct elementwise).  Returns a complex128 array.
    """
    u = as_unit(x)
    lam = {}
    rs = [np.asarray(r, dtype=np.int64) for r, _ in poles]
    ks = [int(k) for _, k in poles]
    shape = np.broadcast(*rs).shape
    rs = [np.broadcast_to(r, shape) for r in rs]
    out = np.zeros(shape, dtype=np.complex128)
    for i, (ri, ki) in enumerate(zip(rs, ks)):
        # Taylor coefficients of prod_{i' != i} (r_i - r_i' + h)^{-k_i'} up to h^{k_i - 1}
        series = [np.ones(shape, dtype=np.float64)] + [np.zeros(shape) for _ in range(ki - 1)]
        for i2, (r2, k2) in enumerate(zip(rs, ks)):
            if i2 == i:
                continue
            d = (ri - r2).astype(np.float64)
            factor = [(-1) ** n * comb(k2 + n - 1, n) * d ** (-k2 - n) for n in range(ki)]
            series = [sum(series[a] * factor[n - a] for a in range(n + 1)) for n in range(ki)]
        re_i, im_i = u.powers(ri)
        xr_i = re_i.astype(np.float64) + 1j * im_i.astype(np.float64)
        for j in range(1, ki + 1):
            if j not in lam:
                lam[j] = complex(two_sided_polylog(j, u, bits))
            acc = np.full(shape, lam[j], dtype=np.complex128)
            for i2, r2 in enumerate(rs):
                if i2 == i:
                    continue
                dd = r2 - ri
                re, im = u.powers(dd)
                acc -= (re.astype(np.float64) + 1j * im.astype(np.float64)) / dd.astype(np.float64) ** j
            out += series[ki - j] * xr_i * acc
    return out


def eval_frakT_bruteforce(p: int, s, q: int, x, y, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    if int(p) != p or int(q) != q or p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    p, q = int(p), int(q)
    s = float(s)
    if not s > 1:
        raise ConvergenceError(f"the m-sum needs s > 1, got {s}")
    ux, uy = as_unit(x), as_unit(y)
    uyx = uy / ux
    bits = prec.significand_bits
    a, b = _two_pole_coefficients(p, q)
    lam = {j: two_sided_polylog(j, ux, bits) for j in range(1, max(p, q) + 1)}
    n = prec.cutoff

    # head: m = 1..n summed directly
    m = np.arange(1, n + 1, dtype=np.int64)
    mf = m.astype(LD)
    xinv_re, xinv_im = ux.inverse().powers(m)
    inner_re = np.zeros(n, dtype=LD)
    inner_im = np.zeros(n, dtype=LD)
    for j, aj in a.items():
        w = LD(aj) * mf ** LD(-(p + q - j))
        sgn = LD((-1) ** j)
        inner_re += w * (LD(str(lam[j].real)) - sgn * xinv_re * mf ** LD(-j))
        inner_im += w * (LD(str(lam[j].imag)) - sgn * xinv_im * mf ** LD(-j))
    for j, bj in b.items():
        w = LD(bj) * mf ** LD(-(p + q - j))
        lre, lim = LD(str(lam[j].real)), LD(str(lam[j].imag))
        inner_re += w * (xinv_re * lre - xinv_im * lim - mf ** LD(-j))
        inner_im += w * (xinv_re * lim + xinv_im * lre)
    y_re, y_im = uy.powers(m)
    ms = mf ** LD(-s)
    head_re = np.sum(ms * (y_re * inner_re - y_im * inner_im))
    head_im = np.sum(ms * (y_re * inner_im + y_im * inner_re))
    majorant = float(np.sum(ms * (np.abs(inner_re) + np.abs(inner_im))))

    # tail: m > n, exact
    with mpmath.workprec(bits + 16):
        tail = mpmath.mpc(0)
        for j, aj in a.items():
            tail += aj * (lam[j] * lerch_tail(uy, s + p + q - j, n, bits)
                          - (-1) ** j * lerch_tail(uyx, s + p + q, n, bits))
        for j, bj in b.items():
            tail += bj * (lam[j] * lerch_tail(uyx, s + p + q - j, n, bits)
                          - lerch_tail(uy, s + p + q, n, bits))
        value = mpmath.mpc(to_mpf(head_re), to_mpf(head_im)) + tail
    slack = 16 * n * LD_EPS * (majorant + 1.0) + 2.0 ** (8 - bits) * float(abs(value))
    return NumericValue(value, 0.0, slack)
