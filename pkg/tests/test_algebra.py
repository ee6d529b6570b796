import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a3zeta.algebra import (
    ConstantExpression,
    ShiftedCombination,
    SymbolicCoefficient,
    expr_eval_numeric,
    lambda_value,
    normalize,
    parse_constant,
    parse_shifted,
    phi_reduce,
    specialize,
    t_closed,
    zeta_value,
)
from a3zeta.errors import DomainError, SingularityError
from a3zeta.exact import GaussianRational as GR
from a3zeta.golden import golden_entry, load_golden
from a3zeta.series import eval_frakT_bruteforce

small = st.fractions(min_value=-20, max_value=20, max_denominator=30)
monomial_exprs = st.builds(
    lambda c, n, k: ConstantExpression.pi_power(n, c) * ConstantExpression.zeta(k),
    small, st.integers(0, 8), st.integers(2, 15),
)
exprs = st.lists(monomial_exprs, max_size=4).map(lambda xs: sum(xs, ConstantExpression()))


def test_json_examples():
    e = ConstantExpression.pi_power(2, Fraction(1, 6))
    assert e.to_json() == {"terms": [{"coeff": {"re": "1/6", "im": "0"}, "pi_pow": 2, "factors": []}]}
    c = phi_reduce(0)
    assert c.to_json()["terms"][0] == {
        "family": "zeta", "shift": 0,
        "coeff": [{"pi_pow": 0, "u_pow": 1, "re": "2", "im": "0"},
                  {"pi_pow": 0, "u_pow": 0, "re": "-1", "im": "0"}],
    }


def test_even_zeta_folds_into_pi():
    assert ConstantExpression.zeta(2) == ConstantExpression.pi_power(2, Fraction(1, 6))
    assert ConstantExpression.L4(3) == ConstantExpression.pi_power(3, Fraction(1, 32))
    assert not ConstantExpression.zeta(3).is_pure_pi()


@given(exprs)
def test_render_round_trip(e):
    assert parse_constant(e.render()) == e
    assert ConstantExpression.from_json(e.to_json()) == e
    assert normalize(normalize(e)) == normalize(e)


@given(exprs, exprs, exprs)
def test_expression_ring(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a - a == ConstantExpression()


@pytest.mark.parametrize("label", sorted(load_golden()))
def test_golden_round_trip(label):
    e = golden_entry(label)
    if isinstance(e, ShiftedCombination):
        assert parse_shifted(e.render()) == e
        assert ShiftedCombination.from_json(e.to_json()) == e
    else:
        assert parse_constant(e.render()) == e
        assert ConstantExpression.from_json(e.to_json()) == e


def test_lambda_values():
    assert lambda_value(0, "i") == ConstantExpression.constant(-1)
    assert lambda_value(1, "i") == ConstantExpression.pi_power(1, GR(0, Fraction(1, 2)))
    assert lambda_value(2, "-i") == ConstantExpression.pi_power(2, Fraction(-1, 24))


def test_specialize_and_singularity():
    c = ShiftedCombination.single("zeta", 0)
    assert specialize(c, 2) == zeta_value(2)
    with pytest.raises(SingularityError):
        specialize(ShiftedCombination.single("zeta", -1), 2)


def test_shifted_needs_s():
    with pytest.raises(DomainError):
        expr_eval_numeric(phi_reduce(2))
    v = expr_eval_numeric(phi_reduce(0), s0=2)
    assert abs(complex(v.value) + math.pi ** 2 / 12) < 1e-15


def test_t_closed_unsupported_pair():
    with pytest.raises(DomainError):
        t_closed(1, 0, 1, "i", "i")


@pytest.mark.parametrize("x,y", [("1", "1"), ("-1", "i"), ("i", "-1"), ("-i", "-1")])
def test_t_closed_matches_bruteforce(x, y):
    closed = expr_eval_numeric(t_closed(2, 0, 3, x, y), s0=2.5)
    brute = eval_frakT_bruteforce(2, 2.5, 3, x, y)
    assert closed.distance(brute) < 1e-10


def test_symbolic_coefficient_at_u():
    c = SymbolicCoefficient({(0, 1): GR(2), (0, 0): GR(-1)})
    assert c.at_u(Fraction(1, 4)) == ConstantExpression.constant(Fraction(-1, 2))
