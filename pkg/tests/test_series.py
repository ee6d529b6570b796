import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from a3zeta.errors import ConvergenceError, DomainError
from a3zeta.lattice import LatticeLabel, TwistLabel
from a3zeta.series import (
    LatticeSeriesSpec,
    Precision,
    check_identity,
    convergence_guard,
    eval_ez2,
    eval_frakT_bruteforce,
    eval_L4,
    eval_phi_alpha,
    eval_tornheim,
    eval_zeta,
    eval_zeta3,
)
from a3zeta.series.lattice_sums import tail_majorant


def test_scalar_values():
    assert abs(complex(eval_zeta(2).value) - math.pi ** 2 / 6) < 1e-15
    assert abs(complex(eval_L4(1).value) - math.pi / 4) < 1e-15
    assert abs(complex(eval_L4(3).value) - math.pi ** 3 / 32) < 1e-15
    assert abs(complex(eval_phi_alpha(2, 0.5).value) + math.pi ** 2 / 12) < 1e-15


def test_scalar_domain():
    with pytest.raises(ConvergenceError):
        eval_zeta(1)
    with pytest.raises(DomainError):
        eval_phi_alpha(2, 0.3)


def test_double_sums_known_values():
    z3 = float(mpmath.zeta(3))
    ez = eval_ez2(1, 2)
    assert ez.agrees_with(z3, 1e-12)
    w = eval_tornheim(1, 1, 1)
    assert w.agrees_with(2 * z3, 1e-12)
    with pytest.raises(ConvergenceError):
        eval_tornheim(0, 0, 1)


def test_guard():
    assert convergence_guard((2,) * 6)
    assert not convergence_guard((1,) * 6)
    with pytest.raises(ConvergenceError):
        LatticeSeriesSpec((1, 1, 1, 1, 1, 1))
    with pytest.raises(DomainError):
        LatticeSeriesSpec((2, 2, 2))


def test_zeta3_error_bound_is_honest():
    spec = LatticeSeriesSpec((2, 2, 2, 2, 2, 2), TwistLabel.ZERO, LatticeLabel.P)
    coarse = eval_zeta3(spec, Precision(cutoff=60))
    fine = eval_zeta3(spec, Precision(cutoff=400))
    assert coarse.distance(fine) <= coarse.error_bound + fine.error_bound
    assert fine.error_bound < 1e-9


def test_zeta3_matches_direct_loop():
    t = (2, 3, 2, 3, 2, 3)
    n = 20
    expected = 0j
    for m1 in range(1, n + 1):
        for m2 in range(1, n + 1):
            for m3 in range(1, n + 1):
                phase = 1j ** ((3 * m1 + 2 * m2 + m3) % 4)
                expected += phase / (m1 ** 2 * m2 ** 3 * m3 ** 2 * (m1 + m2) ** 3 * (m2 + m3) ** 2
                                     * (m1 + m2 + m3) ** 3)
    got = eval_zeta3(LatticeSeriesSpec(t, TwistLabel.LAM1, LatticeLabel.P), Precision(cutoff=n))
    assert abs(complex(got.value) - expected) < 1e-14
    assert tail_majorant(t, n) >= abs(complex(eval_zeta3(LatticeSeriesSpec(t), Precision(cutoff=400)).value)
                                      - complex(eval_zeta3(LatticeSeriesSpec(t), Precision(cutoff=n)).value))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.floats(2.0, 4.0), min_size=6, max_size=6))
def test_zeta3_twists_bounded_by_untwisted(t):
    prec = Precision(cutoff=40)
    plain = eval_zeta3(LatticeSeriesSpec(t), prec)
    for tw in TwistLabel:
        v = eval_zeta3(LatticeSeriesSpec(t, tw, LatticeLabel.P), prec)
        assert abs(v.value) <= abs(plain.value) * (1 + 1e-12)


def test_frakT_bruteforce_agrees_with_direct_sum():
    # T(1, 3, 1; 1, 1) directly, with l summed to a large bound
    direct = 0.0
    for m in range(1, 300):
        for l in range(-4000, 4001):
            if l and l + m:
                direct += 1 / (l * m ** 3 * (l + m))
    v = eval_frakT_bruteforce(1, 3, 1, 1, 1)
    assert abs(complex(v.value) - direct) < 1e-3
    assert v.error_bound < 1e-9


@pytest.mark.parametrize("p", [2, 3])
def test_fourier_identity(p):
    assert check_identity("fourier_pfrac", {"p": p}, 1.0) < 1e-8


def test_bernoulli_identity():
    assert check_identity("bernoulli_fourier", {"j": 2, "alpha": "1/4"}) < 1e-8


def test_double_relation_identity():
    assert check_identity("double_relation", {"p": 2, "q": 2, "s": 2.5, "x": "i"}, 0.5) < 1e-8


def test_identity_errors():
    with pytest.raises(DomainError):
        check_identity("nope", {})
    with pytest.raises(DomainError):
        check_identity("fourier_pfrac", {"p": 2}, 4.0)
