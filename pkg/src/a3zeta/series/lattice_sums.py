"""Triple sums over the A3 lattices.

For a fixed exponent tuple we sum the positive terms once, split into the 64
residue classes of (m1, m2, m3) mod 4.  Every twist is a fourth root of unity
depending only on those residues, and every lattice filter is a rational
combination of twists, so all twelve (twist, lattice) values come from the
same 4x4x4 tensor with exact weights.  The tensor is cached per
(tuple, cutoff).

Inner loop: for each m2 the (m1, m3) double sum is a convolution in
m1 + m3, done on stride-4 sub-arrays so residues stay separated.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from ..errors import ConvergenceError, DomainError
from ..lattice import LatticeLabel, TwistLabel, lattice_twist_weights
from .scalar import DEFAULT_PRECISION, LD, LD_EPS, NumericValue, Precision, to_mpf

__all__ = [
    "LatticeSeriesSpec",
    "convergence_guard",
    "eval_zeta3",
    "residue_tensor",
    "tail_majorant",
    "clear_cache",
]


def convergence_guard(exponents) -> bool:
    s = [float(x) for x in exponents]
    if len(s) != 6:
        return False
    return (
        all(x >= 1 for x in s)
        and s[0] + s[3] + s[5] > 3
        and s[2] + s[4] + s[5] > 3
        and s[1] + s[3] + s[4] + s[5] > 3
        and sum(s) > 6
    )


def _as_exponent(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else float(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    v = float(x)
    return int(v) if v.is_integer() else v


@dataclass(frozen=True)
class LatticeSeriesSpec:
    exponents: tuple
    twist: TwistLabel = TwistLabel.ZERO
    lattice: LatticeLabel = LatticeLabel.P

    def __post_init__(self):
        exps = tuple(_as_exponent(x) for x in self.exponents)
        if len(exps) != 6:
            raise DomainError("an A3 series needs six exponents")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "twist", TwistLabel.parse(self.twist))
        object.__setattr__(self, "lattice", LatticeLabel.parse(self.lattice))
        if not convergence_guard(exps):
            raise ConvergenceError(f"exponents {exps} are outside the absolute-convergence guard")


def _zeta_f(x: float) -> float:
    return float(mpmath.zeta(x))


def tail_majorant(exponents, n: int) -> float:
    """Bound for the sum of the (phase-free) terms with max(m1, m2, m3) > n."""
    s1, s2, s3, s4, s5, s6 = (float(x) for x in exponents)

    def power_tail(sig):
        return n ** (1 - sig) / (sig - 1)

    # m1 > n: (m1+m2+m3)^-s6 <= m1^-(s6/2) (m2+m3)^-(s6/2),  (m2+m3)^-c <= m2^-(c/2) m3^-(c/2)
    c = s5 + s6 / 2
    t1 = power_tail(s1 + s4 + s6 / 2) * _zeta_f(s2 + c / 2) * _zeta_f(s3 + c / 2)
    c = s4 + s6 / 2
    t3 = power_tail(s3 + s5 + s6 / 2) * _zeta_f(s2 + c / 2) * _zeta_f(s1 + c / 2)
    # m2 > n: (m1+m2+m3)^-s6 <= m2^-(s6/2) m1^-(s6/4) m3^-(s6/4)
    t2 = power_tail(s2 + s4 + s5 + s6 / 2) * _zeta_f(s1 + s6 / 4) * _zeta_f(s3 + s6 / 4)
    return (t1 + t2 + t3) * (1 + 1e-9)


class _TensorCache:
    def __init__(self, maxsize: int = 4096):
        self._lock = threading.Lock()
        self._data: OrderedDict = OrderedDict()
        self.maxsize = maxsize

    def get(self, key):
        with self._lock:
            v = self._data.get(key)
            if v is not None:
                self._data.move_to_end(key)
            return v

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self):
        with self._lock:
            self._data.clear()


_CACHE = _TensorCache()


def clear_cache():
    _CACHE.clear()


def _power_table(s, length: int) -> np.ndarray:
    idx = np.arange(length, dtype=LD)
    idx[0] = 1
    out = np.power(idx, LD(-s)) if not isinstance(s, int) else 1 / np.power(idx, s)
    out[0] = 0
    return out


def residue_tensor(exponents, n: int) -> np.ndarray:
    """S[r1, r2, r3] = sum over m in [1, n]^3 with m_i = r_i (mod 4) of the plain term."""
    key = (tuple(exponents), n)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    s1, s2, s3, s4, s5, s6 = exponents
    size = 3 * n + 1
    p1, p2, p3 = (_power_table(x, n + 1) for x in (s1, s2, s3))
    p4, p5 = (_power_table(x, 2 * n + 1) for x in (s4, s5))
    p6 = _power_table(s6, size)
    tensor = np.zeros((4, 4, 4), dtype=LD)
    for m2 in range(1, n + 1):
        f = p1[1:] * p4[1 + m2 : n + 1 + m2]  # position i <-> m1 = i + 1
        g = p3[1:] * p5[1 + m2 : n + 1 + m2]
        r2 = m2 % 4
        block = np.zeros((4, 4), dtype=LD)
        for r1 in range(4):
            i1 = (r1 - 1) % 4
            fr = f[i1::4]
            for r3 in range(4):
                i3 = (r3 - 1) % 4
                h = np.convolve(fr, g[i3::4])
                base = i1 + i3 + 2 + m2
                block[r1, r3] = np.dot(h, p6[base : base + 4 * len(h) : 4])
        tensor[:, r2, :] += p2[m2] * block
    _CACHE.put(key, tensor)
    return tensor


_PHASE_RE = (1, 0, -1, 0)
_PHASE_IM = (0, 1, 0, -1)


def _twisted_totals(tensor: np.ndarray):
    """T_k = sum_r i^{k (3 r1 + 2 r2 + r3)} S[r] for k = 0..3, as (re, im) longdoubles."""
    r1, r2, r3 = np.meshgrid(np.arange(4), np.arange(4), np.arange(4), indexing="ij")
    base = 3 * r1 + 2 * r2 + r3
    out = []
    for k in range(4):
        e = (k * base) % 4
        re = np.sum(tensor * np.choose(e, _PHASE_RE).astype(LD))
        im = np.sum(tensor * np.choose(e, _PHASE_IM).astype(LD))
        out.append((re, im))
    return out


def eval_zeta3(spec: LatticeSeriesSpec, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    if not isinstance(spec, LatticeSeriesSpec):
        raise DomainError("eval_zeta3 expects a LatticeSeriesSpec")
    n = prec.cutoff
    tensor = residue_tensor(spec.exponents, n)
    totals = _twisted_totals(tensor)
    weights = lattice_twist_weights(spec.lattice)
    t = spec.twist.index
    with mpmath.workprec(prec.significand_bits):
        value = mpmath.mpc(0)
        for j, w in enumerate(weights):
            if w == 0:
                continue
            re, im = totals[(t + j) % 4]
            value += to_mpf(w) * mpmath.mpc(to_mpf(re), to_mpf(im))
    majorant = float(np.sum(tensor))
    wsum = float(sum(abs(w) for w in weights))
    slack = 8 * n * LD_EPS * majorant * wsum
    return NumericValue(value, tail_majorant(spec.exponents, n), slack)
