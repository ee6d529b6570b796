"""Fixed data for the A3 root system.

Coordinates are taken in the simple-root basis (alpha_1, alpha_2, alpha_3).
A lattice point of the dominant cone shifted by rho is written
``m1*lambda_1 + m2*lambda_2 + m3*lambda_3`` with ``m`` in N^3; the twists and
lattice filters below act on these shifted indices.

The three twists are the powers ``g, g^2, g^3`` of a character of
P/Q = Z/4, namely ``g(m) = i^(3 m1 + 2 m2 + m3)``.  Both lattice filters are
therefore linear combinations of twists, which is what the numeric engine
exploits.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .exact import GaussianRational

__all__ = [
    "TwistLabel",
    "LatticeLabel",
    "WeightVector",
    "FUNDAMENTAL_WEIGHTS",
    "SIMPLE_ROOTS",
    "RHO",
    "pairing",
    "twist_phase",
    "twist_phase_from_pairing",
    "lattice_member",
    "tuple_symmetry",
    "mirror",
    "lattice_twist_weights",
    "twist_power",
]


class TwistLabel(str, Enum):
    ZERO = "zero"
    LAM1 = "lam1"
    LAM2 = "lam2"
    LAM3 = "lam3"

    @classmethod
    def parse(cls, value) -> "TwistLabel":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            raise DomainError(f"unknown twist {value!r}; expected zero, lam1, lam2 or lam3") from None

    @property
    def index(self) -> int:
        return _TWIST_INDEX[self]


_TWIST_INDEX = {TwistLabel.ZERO: 0, TwistLabel.LAM1: 1, TwistLabel.LAM2: 2, TwistLabel.LAM3: 3}
_TWIST_BY_INDEX = {v: k for k, v in _TWIST_INDEX.items()}


class LatticeLabel(str, Enum):
    P = "P"
    L1 = "L1"
    Q = "Q"

    @classmethod
    def parse(cls, value) -> "LatticeLabel":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            raise DomainError(f"unknown lattice {value!r}; expected P, L1 or Q") from None


@dataclass(frozen=True)
class WeightVector:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3:
            raise DomainError("A3 weights have three coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, k) -> "WeightVector":
        return WeightVector(tuple(Fraction(k) * a for a in self.coords))


FUNDAMENTAL_WEIGHTS = (
    WeightVector((Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))),
    WeightVector((Fraction(1, 2), Fraction(1), Fraction(1, 2))),
    WeightVector((Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))),
)
SIMPLE_ROOTS = (
    WeightVector((1, 0, 0)),
    WeightVector((0, 1, 0)),
    WeightVector((0, 0, 1)),
)
RHO = FUNDAMENTAL_WEIGHTS[0] + FUNDAMENTAL_WEIGHTS[1] + FUNDAMENTAL_WEIGHTS[2]


def pairing(coweight, weight: WeightVector) -> Fraction:
    """<lambda_j^vee, weight>: the j-th simple-root coordinate (0 for the zero twist)."""
    t = TwistLabel.parse(coweight)
    if t is TwistLabel.ZERO:
        return Fraction(0)
    return weight.coords[t.index - 1]


def _check_m(m: Sequence[int]):
    if len(m) != 3 or any(int(x) != x or x < 1 for x in m):
        raise DomainError(f"lattice index must be a triple of positive integers, got {m!r}")


def twist_phase(twist, m: Sequence[int]) -> GaussianRational:
    _check_m(m)
    return GaussianRational.i_power(twist_power(twist, m))


def twist_power(twist, m: Sequence[int]) -> int:
    """Exponent e with twist_phase = i^e (reduced mod 4)."""
    t = TwistLabel.parse(twist)
    m1, m2, m3 = m
    base = 3 * m1 + 2 * m2 + m3
    return (t.index * base) % 4


def twist_phase_from_pairing(twist, m: Sequence[int]) -> GaussianRational:
    """Phase recomputed from e^{2 pi i <y, sum m_j lambda_j>}; the pairing is a multiple of 1/4."""
    _check_m(m)
    lam = sum((k * w for k, w in zip(m, FUNDAMENTAL_WEIGHTS)), WeightVector((0, 0, 0)))
    x = pairing(twist, lam) % 1
    if (4 * x).denominator != 1:
        raise AssertionError("pairing is not a quarter integer")
    return GaussianRational.i_power(int(4 * x))


def lattice_member(lattice, m: Sequence[int]) -> bool:
    _check_m(m)
    lat = LatticeLabel.parse(lattice)
    m1, m2, m3 = m
    if lat is LatticeLabel.P:
        return True
    if lat is LatticeLabel.L1:
        return (m1 - m3) % 2 == 0
    return (m1 + 2 * m2 + 3 * m3) % 4 == 2


# indicator of each lattice as a combination of the four twisted sums over P
_LATTICE_WEIGHTS = {
    LatticeLabel.P: (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    LatticeLabel.L1: (Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(0)),
    LatticeLabel.Q: (Fraction(1, 4), Fraction(-1, 4), Fraction(1, 4), Fraction(-1, 4)),
}


def lattice_twist_weights(lattice) -> tuple:
    """Rational weights w_j with 1_L(m) = sum_j w_j g(m)^j, g the lam1 phase."""
    return _LATTICE_WEIGHTS[LatticeLabel.parse(lattice)]


def mirror(t: Sequence):
    """(s1,...,s6) -> (s3,s2,s1,s5,s4,s6)."""
    if len(t) != 6:
        raise DomainError("exponent tuples have six entries")
    return (t[2], t[1], t[0], t[4], t[3], t[5])


def tuple_symmetry(t: Sequence, twist):
    tw = TwistLabel.parse(twist)
    swapped = {TwistLabel.LAM1: TwistLabel.LAM3, TwistLabel.LAM3: TwistLabel.LAM1}.get(tw, tw)
    return mirror(t), swapped


def twist_from_index(j: int) -> TwistLabel:
    return _TWIST_BY_INDEX[j % 4]
