"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`; Gaussian rationals wrap a pair of
them.  Bernoulli and Euler numbers come from exact recurrences with a shared,
lock-protected cache so that golden values never pass through floating point.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .errors import DomainError

__all__ = [
    "GaussianRational",
    "BernoulliCache",
    "as_fraction",
    "binomial",
    "bernoulli_number",
    "bernoulli_poly",
    "euler_number",
    "zeta_even_coefficient",
    "L4_odd_coefficient",
    "zeta_even_closed",
    "L4_odd_closed",
]

RationalLike = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    """Exact element ``re + im*i`` of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError("only integral complex literals can be coerced exactly")
            return cls(int(x.real), int(x.imag))
        return cls(as_fraction(x))

    @classmethod
    def i_power(cls, n: int) -> "GaussianRational":
        return _I_POWERS[n % 4]

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conj()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_gaussian(self)


_I_POWERS = (
    GaussianRational(1, 0),
    GaussianRational(0, 1),
    GaussianRational(-1, 0),
    GaussianRational(0, -1),
)


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Compact canonical text: ``1/6``, ``-1/2*i``, ``3/4-1/2*i``."""
    if z.im == 0:
        return _fmt_frac(z.re)
    im = _fmt_frac(abs(z.im)) + "*i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im
    return _fmt_frac(z.re) + ("-" if z.im < 0 else "+") + im


def binomial(x: int, k: int) -> int:
    """C(x, k) with the falling-factorial definition (x may be negative)."""
    if k < 0:
        return 0
    if x >= 0:
        return comb(x, k)
    # C(-n, k) = (-1)^k C(n+k-1, k)
    return (-1) ** k * comb(-x + k - 1, k)


class BernoulliCache:
    """Monotonically extended tables of B_n (B_1 = -1/2) and Euler numbers E_n."""

    def __init__(self):
        self._lock = threading.Lock()
        self.bernoulli: list[Fraction] = [Fraction(1)]
        self.euler: list[int] = [1]

    def bernoulli_upto(self, n: int) -> list[Fraction]:
        if n < len(self.bernoulli):
            return self.bernoulli
        with self._lock:
            table = list(self.bernoulli)
            for m in range(len(table), n + 1):
                # sum_{k=0}^{m} C(m+1, k) B_k = 0
                acc = sum(comb(m + 1, k) * table[k] for k in range(m))
                table.append(-acc / (m + 1))
            self.bernoulli = table
        return self.bernoulli

    def euler_upto(self, n: int) -> list[int]:
        if n < len(self.euler):
            return self.euler
        with self._lock:
            table = list(self.euler)
            for m in range(len(table), n + 1):
                if m % 2:
                    table.append(0)
                else:
                    # sum_{k=0}^{m/2} C(m, 2k) E_{2k} = 0
                    table.append(-sum(comb(m, k) * table[k] for k in range(0, m, 2)))
            self.euler = table
        return self.euler


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    if n < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {n}")
    return _CACHE.bernoulli_upto(n)[n]


def euler_number(n: int) -> int:
    if n < 0:
        raise DomainError(f"Euler index must be >= 0, got {n}")
    return _CACHE.euler_upto(n)[n]


def bernoulli_poly(n: int, x: RationalLike) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise DomainError(f"Bernoulli polynomial degree must be >= 0, got {n}")
    x = as_fraction(x)
    table = _CACHE.bernoulli_upto(n)
    return sum((comb(n, k) * table[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def zeta_even_coefficient(n: int) -> Fraction:
    """Rational r with zeta(n) = r * pi^n for even n >= 0."""
    if n < 0 or n % 2:
        raise DomainError(f"zeta closed form needs an even non-negative argument, got {n}")
    if n == 0:
        return Fraction(-1, 2)
    k = n // 2
    return (-1) ** (k + 1) * bernoulli_number(n) * 2 ** n / (2 * factorial(n))


def L4_odd_coefficient(n: int) -> Fraction:
    """Rational r with L(n, chi_4) = r * pi^n for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"L(n, chi_4) has a closed form only for odd n >= 1, got {n}")
    k = (n - 1) // 2
    return Fraction((-1) ** k * euler_number(2 * k), 4 ** (k + 1) * factorial(2 * k))


def zeta_even_closed(n: int):
    from .algebra.expressions import ConstantExpression

    return ConstantExpression.pi_power(n, zeta_even_coefficient(n))


def L4_odd_closed(n: int):
    from .algebra.expressions import ConstantExpression

    return ConstantExpression.pi_power(n, L4_odd_coefficient(n))
