from fractions import Fraction

import pytest

from a3zeta.algebra import ConstantExpression
from a3zeta.errors import DomainError
from a3zeta.golden import golden_entry
from a3zeta.lattice import mirror
from a3zeta.relations import (
    S,
    STUFFLE_TRIPLES,
    RelationParams,
    SignedTuple,
    TheoremId,
    collapsed_lhs,
    derive_evaluation,
    lattice_value,
    lhs_terms,
    merge_terms,
    rhs_part,
    stuffle_collapse,
    theorem_rhs,
    verify_relation,
    witten_value,
)
from a3zeta.series import Precision


def test_twelve_rows():
    rows = lhs_terms(RelationParams(2, 3, 4, 5, 6))
    assert len(rows) == 12
    assert all(sum(1 for x in r.slots if x == S) == 1 for r in rows)
    assert rows[0] == SignedTuple(1, (2, 3, S, 4, 5, 6))


def test_all_two_rows_merge():
    params = RelationParams(2, 2, 2, 2, 2, s=2)
    for th in TheoremId:
        merged = merge_terms(lhs_terms(params), th)
        assert merged.terms == [(12, (2,) * 6)]


def test_lam1_context_does_not_mirror():
    params = RelationParams(2, 2, 2, 2, 2)
    sym = merge_terms(lhs_terms(params), TheoremId.SO6)
    plain = merge_terms(lhs_terms(params), TheoremId.SU4_lam1)
    assert len(plain) > len(sym)
    assert sum(abs(c) for c, _ in plain.terms) == 12
    assert plain.total_multiplicity == sym.total_multiplicity


def test_theorem_combinations():
    params = RelationParams(2, 3, 2, 3, 2)
    j = {k: rhs_part(k, params) for k in ("J0", "J1", "J2", "J3")}
    assert theorem_rhs("A3", params) == j["J0"]
    assert theorem_rhs("SO6", params) == (j["J0"] + j["J2"]).scale(Fraction(1, 2))
    pu4 = (j["J0"] - j["J1"] + j["J2"] - j["J3"]).scale(Fraction(1, 4))
    assert theorem_rhs("PU4", params) == pu4


def test_witten_value():
    z3, zw = witten_value(1)
    assert z3 == ConstantExpression.pi_power(12, Fraction(23, 2554051500))
    assert zw == ConstantExpression.pi_power(12, Fraction(92, 70945875))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_A3_family(k):
    ev = derive_evaluation(k, "A3")
    assert ev.exponents == (2 * k,) + (2 * k + 1,) * 5
    assert ev.value == golden_entry(f"Exam-A3-k{k}")


@pytest.mark.parametrize("k", [2, 3])
def test_lam2_family(k):
    assert derive_evaluation(k, "SU4_lam2").value == golden_entry(f"Exam-A3-lam2-k{k}")


def test_collapse_records_stuffle_rules():
    lhs = collapsed_lhs(1, TheoremId.A3)
    assert lhs.rules
    assert all(rule[0] in STUFFLE_TRIPLES for rule in lhs.rules)


def test_stuffle_step_identity():
    # (x, y-1, z) - (x, y, z-1) = -(x-1, y, z) on slots (m1, m2, m1+m2)
    terms = [SignedTuple(1, (3, 2, 5, 4, 4, 4)), SignedTuple(-1, (3, 3, 5, 3, 4, 4))]
    out = stuffle_collapse(merge_terms(terms, "zero"))
    assert len(out) == 1


def test_lam1_equals_lam3_value():
    assert derive_evaluation(1, "SU4_lam1").value == derive_evaluation(1, "SU4_lam3").value
    assert derive_evaluation(1, "SU4_lam1").value.is_real()


def test_so6_family_not_supported():
    with pytest.raises(DomainError):
        derive_evaluation(1, "SO6")
    with pytest.raises(DomainError):
        derive_evaluation(0, "A3")


def test_lattice_values_consistent():
    so6 = lattice_value(1, "zero", "L1")
    a3 = lattice_value(1, "zero", "P")
    lam2 = lattice_value(1, "lam2", "P")
    assert so6 == (a3 + lam2) * Fraction(1, 2)
    assert lattice_value(1, "lam1", "P") == lattice_value(1, "lam3", "P")


def test_verify_domain():
    with pytest.raises(DomainError):
        verify_relation("A3", RelationParams(1, 2, 2, 2, 2), 2)
    with pytest.raises(DomainError):
        verify_relation("A3", RelationParams(2, 2, 2, 2, 2), 1.5)
    with pytest.raises(DomainError):
        RelationParams(0, 2, 2, 2, 2)


def test_verify_noninteger_s():
    rep = verify_relation("SU4_lam1", RelationParams(2, 3, 2, 2, 3), 2.5, Precision(cutoff=200))
    assert rep.passed and rep.status == "passed"


def test_verify_detects_wrong_rhs(monkeypatch):
    import a3zeta.relations as rel

    real = rel.theorem_rhs
    monkeypatch.setattr(rel, "theorem_rhs", lambda th, p: real(th, p).scale(Fraction(11, 10)))
    rep = rel.verify_relation("A3", RelationParams(2, 2, 2, 2, 2), 2)
    assert not rep.passed and rep.status == "failed"


def test_mirror_canonical_terms():
    merged = merge_terms(lhs_terms(RelationParams(2, 3, 4, 3, 2)), TheoremId.A3)
    for _, t in merged.terms:
        assert mirror(t) not in [u for _, u in merged.terms] or mirror(t) == t


@pytest.mark.parametrize("target", ["A3", "SU4_lam2", "SU4_lam1", "PU4"])
def test_each_stuffle_rule_holds_numerically(target):
    from a3zeta.series import LatticeSeriesSpec, eval_zeta3

    th = TheoremId.parse(target)
    prec = Precision(cutoff=400)
    lhs = collapsed_lhs(1, th)
    assert lhs.rules
    for _, a, b, t, _ in lhs.rules:
        vals = [eval_zeta3(LatticeSeriesSpec(x, th.twist, th.lattice), prec) for x in (a, b, t)]
        residual = vals[0] - vals[1] + vals[2]
        assert abs(complex(residual.value)) < 1e-8 + residual.error_bound
