import itertools

import pytest
from hypothesis import given, strategies as st

from a3zeta.errors import DomainError
from a3zeta.exact import GaussianRational as GR
from a3zeta.lattice import (
    LatticeLabel,
    TwistLabel,
    lattice_member,
    lattice_twist_weights,
    mirror,
    pairing,
    tuple_symmetry,
    twist_phase,
    twist_phase_from_pairing,
    FUNDAMENTAL_WEIGHTS,
)

points = st.tuples(*(st.integers(1, 200),) * 3)


def test_pairing_is_simple_root_coordinate():
    lam2 = FUNDAMENTAL_WEIGHTS[1]
    assert pairing(TwistLabel.LAM2, lam2) == 1
    assert pairing(TwistLabel.ZERO, lam2) == 0


@given(points)
def test_phase_matches_pairing(m):
    for tw in TwistLabel:
        assert twist_phase(tw, m) == twist_phase_from_pairing(tw, m)


@given(points)
def test_lattice_indicator_is_twist_combination(m):
    g = twist_phase(TwistLabel.LAM1, m)
    for lat in LatticeLabel:
        total = sum((GR(w) * g ** j for j, w in enumerate(lattice_twist_weights(lat))), GR(0))
        assert total == GR(int(lattice_member(lat, m)))


def test_lattices_are_nested():
    for m in itertools.product(range(1, 9), repeat=3):
        if lattice_member(LatticeLabel.Q, m):
            assert lattice_member(LatticeLabel.L1, m)


def test_lam2_phase_is_sign():
    assert twist_phase(TwistLabel.LAM2, (1, 5, 2)) == GR(-1)
    assert twist_phase(TwistLabel.LAM2, (1, 5, 3)) == GR(1)


@given(st.tuples(*(st.integers(1, 9),) * 6))
def test_mirror_is_involution(t):
    assert mirror(mirror(t)) == t


def test_tuple_symmetry_swaps_lam1_lam3():
    t = (1, 2, 3, 4, 5, 6)
    assert tuple_symmetry(t, "lam1") == ((3, 2, 1, 5, 4, 6), TwistLabel.LAM3)
    assert tuple_symmetry(t, "lam2") == ((3, 2, 1, 5, 4, 6), TwistLabel.LAM2)


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, 2), (1.5, 1, 1)])
def test_bad_points(bad):
    with pytest.raises(DomainError):
        twist_phase(TwistLabel.LAM1, bad)


def test_unknown_labels():
    with pytest.raises(DomainError):
        TwistLabel.parse("lam4")
    with pytest.raises(DomainError):
        LatticeLabel.parse("L2")
