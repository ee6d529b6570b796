from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from a3zeta.errors import DomainError
from a3zeta.exact import (
    GaussianRational as GR,
    L4_odd_coefficient,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    zeta_even_coefficient,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
gaussians = st.builds(GR, fractions, fractions)


def test_bernoulli_values():
    assert [bernoulli_number(n) for n in range(7)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_euler_values():
    assert [euler_number(n) for n in range(0, 9, 2)] == [1, -1, 5, -61, 1385]


def test_zeta_and_L4_closed_forms():
    assert zeta_even_coefficient(2) == Fraction(1, 6)
    assert zeta_even_coefficient(12) == Fraction(691, 638512875)
    assert L4_odd_coefficient(1) == Fraction(1, 4)
    assert L4_odd_coefficient(3) == Fraction(1, 32)
    assert L4_odd_coefficient(5) == Fraction(5, 1536)
    for n in (2, 4, 10):
        r = zeta_even_coefficient(n)
        with mpmath.workdps(40):
            assert abs(mpmath.zeta(n) - mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** n) < 1e-30


@pytest.mark.parametrize("n", [-2, 3])
def test_zeta_closed_form_domain(n):
    with pytest.raises(DomainError):
        zeta_even_coefficient(n)


def test_L4_domain():
    with pytest.raises(DomainError):
        L4_odd_coefficient(2)


@given(st.integers(0, 12), fractions)
def test_bernoulli_reflection(n, x):
    assert bernoulli_poly(n, 1 - x) == (-1) ** n * bernoulli_poly(n, x)


@given(st.integers(1, 12), fractions)
def test_bernoulli_difference(n, x):
    assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == n * x ** (n - 1)


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).conj() == a.conj() * b.conj()


@given(gaussians, gaussians)
def test_gaussian_division(a, b):
    if not b.is_zero():
        assert (a / b) * b == a


def test_i_powers():
    assert GR.i_power(1) * GR.i_power(1) == GR(-1)
    assert GR.i_power(4) == GR(1)
    assert complex(GR(Fraction(1, 2), -3)) == complex(0.5, -3)
