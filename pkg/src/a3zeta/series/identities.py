"""Residual checks for the theta-parameterised identities.

Each check evaluates both sides independently and returns |LHS - RHS|.

fourier_pfrac      lim_L sum_{0<|l|<=L} (-1)^l e^{il theta} / l^p
                   = 2 sum_j phi(p-j) eps_{p-j} (i theta)^j / j!
bernoulli_fourier  lim_K sum_{0<|k|<=K} e^{2 pi i k alpha} / k^j = -B_j(alpha) (2 pi i)^j / j!
double_relation    the two-variable relation between T(p, s, q; -e^{i theta}, -x e^{i theta})
                   and one-variable Lerch series
master             the three-variable relation expressing the (l, m, n) sum through T sums
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import comb, factorial

import mpmath
import numpy as np

from ..errors import DomainError
from ..exact import bernoulli_poly, zeta_even_coefficient
from .frakt import UnitPhase, as_unit, eval_frakT_bruteforce, lerch_tail, pole_sum
from .scalar import DEFAULT_PRECISION, Precision

__all__ = ["IDENTITIES", "check_identity", "symmetric_power_sum"]

IDENTITIES = ("fourier_pfrac", "bernoulli_fourier", "double_relation", "master")


def _phi_eps(n: int) -> mpmath.mpf:
    """phi(n) * eps_n: zero for odd n, phi(0) = -1/2, phi(2k) = (2^{1-2k} - 1) zeta(2k)."""
    if n % 2:
        return mpmath.mpf(0)
    r = (Fraction(2) ** (1 - n) - 1) * zeta_even_coefficient(n)
    return mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** n


def symmetric_power_sum(z, p: int, terms: int, chunk: int = 1 << 20) -> complex:
    """sum_{0 < |l| <= terms} z^l / l^p for unimodular z, in chunks of float64."""
    u = as_unit(z)
    total = 0j
    sign = (-1) ** p
    for start in range(1, terms + 1, chunk):
        l = np.arange(start, min(start + chunk, terms + 1), dtype=np.int64)
        re, im = u.powers(l)
        re, im = re.astype(np.float64), im.astype(np.float64)
        lp = l.astype(np.float64) ** p
        # z^l + (-1)^p z^-l
        total += complex(np.sum((re + sign * re) / lp), np.sum((im - sign * im) / lp))
    return total


def _terms_for(p: int) -> int:
    return 10_000_000 if p == 1 else 200_000


def _fourier_pfrac(params, theta, prec):
    p = int(params["p"])
    if p < 1:
        raise DomainError("p must be >= 1")
    if not -math.pi < theta < math.pi:
        raise DomainError("theta must lie in (-pi, pi)")
    lhs = symmetric_power_sum(UnitPhase.from_angle(theta + math.pi), p, _terms_for(p))
    with mpmath.workprec(prec.significand_bits):
        it = mpmath.mpc(0, theta)
        rhs = 2 * mpmath.fsum(_phi_eps(p - j) * it ** j / factorial(j) for j in range(p + 1))
    return abs(complex(rhs) - lhs)


def _bernoulli_fourier(params, theta, prec):
    j = int(params["j"])
    alpha = Fraction(params["alpha"]) % 1
    if j < 1:
        raise DomainError("j must be >= 1")
    if j == 1 and alpha == 0:
        raise DomainError("the j = 1 series needs alpha in (0, 1)")
    z = UnitPhase.from_angle(2 * math.pi * float(alpha))
    lhs = symmetric_power_sum(z, j, _terms_for(j))
    with mpmath.workprec(prec.significand_bits):
        b = bernoulli_poly(j, alpha)
        rhs = -(mpmath.mpf(b.numerator) / b.denominator) * (2j * mpmath.pi) ** j / factorial(j)
    return abs(complex(rhs) - lhs)


def _li(z, sigma, prec) -> mpmath.mpc:
    return lerch_tail(z, sigma, 0, prec.significand_bits)


def _double_relation(params, theta, prec):
    p, q = int(params["p"]), int(params["q"])
    s = float(params["s"])
    x = as_unit(params["x"])
    minus_e = UnitPhase.from_angle(theta + math.pi)
    lhs = eval_frakT_bruteforce(p, s, q, minus_e, minus_e * x, prec).value
    with mpmath.workprec(prec.significand_bits):
        it = mpmath.mpc(0, theta)
        z2 = minus_e * x
        t2 = mpmath.mpc(0)
        for j in range(p + 1):
            w = _phi_eps(p - j)
            if w == 0:
                continue
            for xi in range(j + 1):
                if theta == 0 and xi:
                    continue
                t2 += (w * comb(q - 1 + j - xi, q - 1) * (-1) ** (j - xi)
                       * _li(z2, s + q + j - xi, prec) * it ** xi / factorial(xi))
        t3 = mpmath.mpc(0)
        for j in range(q + 1):
            w = _phi_eps(q - j)
            if w == 0:
                continue
            for xi in range(j + 1):
                if theta == 0 and xi:
                    continue
                t3 += (w * comb(p - 1 + j - xi, p - 1) * (-1) ** (p - 1)
                       * _li(x, s + p + j - xi, prec) * it ** xi / factorial(xi))
        total = lhs - 2 * t2 + 2 * t3
    return float(abs(total))


def master_lhs(p, q, s, a, b, c, x, y, theta, cutoff: int, bits: int = 128) -> complex:
    """Direct (m, n) sum with the l-sum done exactly; m in [-cutoff, cutoff], n in [1, cutoff]."""
    big_x = UnitPhase.from_angle(theta + math.pi)
    ux, uy = as_unit(x), as_unit(y)
    m_axis = np.concatenate([np.arange(-cutoff, 0), np.arange(1, cutoff + 1)]).astype(np.int64)
    n_axis = np.arange(1, cutoff + 1, dtype=np.int64)
    mm, nn = np.meshgrid(m_axis, n_axis, indexing="ij")
    keep = (mm + nn) != 0
    mm, nn = mm[keep], nn[keep]
    inner = pole_sum(big_x, [(np.zeros_like(mm), p), (-mm, a), (-mm - nn, c)], bits)
    wr, wi = (big_x * ux).powers(mm)
    yr, yi = uy.powers(nn)
    phase = (wr.astype(np.float64) + 1j * wi.astype(np.float64)) * (
        yr.astype(np.float64) + 1j * yi.astype(np.float64))
    mf, nf = mm.astype(np.float64), nn.astype(np.float64)
    weight = phase / (mf ** q * nf ** s * (mf + nf) ** b)
    return complex(np.sum(weight * inner))


def master_rhs(p, q, s, a, b, c, x, y, theta, prec: Precision) -> mpmath.mpc:
    ux, uy = as_unit(x), as_unit(y)
    e = UnitPhase.from_angle(theta)
    neg = UnitPhase.from_quarter(2)
    x1 = neg * ux * e          # -x e^{i theta}
    y2 = neg * uy * e.inverse()  # -y e^{-i theta}
    cache: dict = {}

    def T(pp, ss, qq, xx, yy):
        key = (pp, ss, qq, xx, yy)
        if key not in cache:
            cache[key] = eval_frakT_bruteforce(pp, ss, qq, xx, yy, prec).value
        return cache[key]

    with mpmath.workprec(prec.significand_bits):
        it = mpmath.mpc(0, theta)

        def xi_factor(xi):
            return it ** xi / factorial(xi)

        total = mpmath.mpc(0)
        for k in range(p + 1):
            w = _phi_eps(p - k)
            if w == 0:
                continue
            for xi in range(k + 1):
                if theta == 0 and xi:
                    continue
                for om in range(k - xi + 1):
                    r = k - xi - om
                    coef = comb(om + a - 1, om) * (-1) ** om * comb(r + c - 1, r) * (-1) ** r
                    total += 2 * w * coef * T(q + a + om, s, b + c + r, x1, uy) * xi_factor(xi)
        for k in range(c + 1):
            w = _phi_eps(c - k)
            if w == 0:
                continue
            for xi in range(k + 1):
                if theta == 0 and xi:
                    continue
                for om in range(k - xi + 1):
                    r = k - xi - om
                    coef = (comb(om + a - 1, om) * (-1) ** om * comb(r + p - 1, p - 1)
                            * (-1) ** (p - 1 + a + om))
                    total -= 2 * w * coef * T(q, s + a + om, p + b + r, ux, y2) * xi_factor(xi)
        for k in range(a + 1):
            w = _phi_eps(a - k)
            if w == 0:
                continue
            for xi in range(k + 1):
                if theta == 0 and xi:
                    continue
                for om in range(p):
                    coef = (comb(om + k - xi, om) * (-1) ** om * comb(p + c - 2 - om, p - 1 - om)
                            * (-1) ** (p - 1 - om))
                    total -= 2 * w * coef * T(q + k - xi + om + 1, s, p + b + c - 1 - om, ux, uy) * xi_factor(xi)
                for om in range(c):
                    coef = (comb(om + k - xi, om) * (-1) ** om * comb(p + c - 2 - om, p - 1)
                            * (-1) ** (p + k - xi + om))
                    total += 2 * w * coef * T(q, s + k - xi + om + 1, p + b + c - 1 - om, ux, uy) * xi_factor(xi)
    return total


def _master(params, theta, prec):
    vals = {k: int(params[k]) for k in ("p", "q", "a", "b", "c")}
    s = float(params["s"])
    if min(vals.values()) < 1 or s <= 1:
        raise DomainError("master identity needs p, q, a, b, c >= 1 and s > 1")
    args = (vals["p"], vals["q"], s, vals["a"], vals["b"], vals["c"], params["x"], params["y"], theta)
    lhs = master_lhs(*args, cutoff=prec.cutoff, bits=prec.significand_bits)
    rhs = master_rhs(*args, prec=prec)
    return float(abs(complex(rhs) - lhs))


_DISPATCH = {
    "fourier_pfrac": _fourier_pfrac,
    "bernoulli_fourier": _bernoulli_fourier,
    "double_relation": _double_relation,
    "master": _master,
}


def check_identity(identity_id: str, params: dict, theta: float = 0.0,
                   prec: Precision = DEFAULT_PRECISION) -> float:
    """Return |LHS - RHS| for one of the identities in ``IDENTITIES``."""
    fn = _DISPATCH.get(identity_id)
    if fn is None:
        raise DomainError(f"unknown identity {identity_id!r}; expected one of {', '.join(IDENTITIES)}")
    theta = float(theta)
    if not -math.pi <= theta <= math.pi:
        raise DomainError("theta must lie in [-pi, pi]")
    return fn(params, theta, prec)
