"""Functional relations for the A3 lattice zeta-functions.

Every theorem has the same twelve-term left-hand side, evaluated with a
theorem-specific (twist, lattice) pair, and a right-hand side assembled from
four blocks J0..J3.  Each block is a finite sum of T closed forms, so the
right-hand side comes out as an exact :class:`ShiftedCombination`.

Exponent slots hold integers or the marker ``S`` standing for the free
variable s.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

from .algebra.closed_forms import lambda_value, phi_value, specialize, t_closed, zeta_value
from .algebra.expressions import ConstantExpression, ShiftedCombination
from .algebra.numeric import expr_eval_numeric
from .errors import CollapseError, DomainError
from .lattice import LatticeLabel, TwistLabel, lattice_twist_weights, mirror, twist_from_index
from .series.lattice_sums import LatticeSeriesSpec, eval_zeta3
from .series.scalar import DEFAULT_PRECISION, NumericValue, Precision

__all__ = [
    "S",
    "RelationParams",
    "TheoremId",
    "SignedTuple",
    "SignedTupleList",
    "VerificationReport",
    "Evaluation",
    "lhs_terms",
    "merge_terms",
    "stuffle_collapse",
    "rhs_part",
    "theorem_rhs",
    "verify_relation",
    "derive_evaluation",
    "witten_value",
    "lattice_value",
    "evaluate_at",
    "collapsed_lhs",
    "STUFFLE_TRIPLES",
]

S = "s"


class TheoremId(str, Enum):
    A3 = "A3"
    SU4_lam2 = "SU4_lam2"
    SO6 = "SO6"
    SU4_lam1 = "SU4_lam1"
    SU4_lam3 = "SU4_lam3"
    PU4 = "PU4"

    @classmethod
    def parse(cls, value) -> "TheoremId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            names = ", ".join(t.value for t in cls)
            raise DomainError(f"unknown theorem {value!r}; expected one of {names}") from None

    @property
    def twist(self) -> TwistLabel:
        return _SETUP[self][0]

    @property
    def lattice(self) -> LatticeLabel:
        return _SETUP[self][1]

    @property
    def symmetric(self) -> bool:
        """Whether the LHS series is invariant under the mirror map of exponents."""
        return self not in (TheoremId.SU4_lam1, TheoremId.SU4_lam3)

    @property
    def combination(self) -> dict:
        return _COMBINATIONS[self]


_SETUP = {
    TheoremId.A3: (TwistLabel.ZERO, LatticeLabel.P),
    TheoremId.SU4_lam2: (TwistLabel.LAM2, LatticeLabel.P),
    TheoremId.SO6: (TwistLabel.ZERO, LatticeLabel.L1),
    TheoremId.SU4_lam1: (TwistLabel.LAM1, LatticeLabel.P),
    TheoremId.SU4_lam3: (TwistLabel.LAM3, LatticeLabel.P),
    TheoremId.PU4: (TwistLabel.ZERO, LatticeLabel.Q),
}
_COMBINATIONS = {
    TheoremId.A3: {"J0": Fraction(1)},
    TheoremId.SU4_lam2: {"J2": Fraction(1)},
    TheoremId.SO6: {"J0": Fraction(1, 2), "J2": Fraction(1, 2)},
    TheoremId.SU4_lam1: {"J1": Fraction(1)},
    TheoremId.SU4_lam3: {"J3": Fraction(1)},
    TheoremId.PU4: {"J0": Fraction(1, 4), "J1": Fraction(-1, 4), "J2": Fraction(1, 4), "J3": Fraction(-1, 4)},
}


@dataclass(frozen=True)
class RelationParams:
    p: int
    q: int
    a: int
    b: int
    c: int
    s: object = None

    def __post_init__(self):
        for name in ("p", "q", "a", "b", "c"):
            v = getattr(self, name)
            if int(v) != v or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.s is not None and self.s != S:
            v = float(self.s)
            object.__setattr__(self, "s", int(v) if v.is_integer() else v)

    @property
    def symbolic(self) -> bool:
        return self.s is None or self.s == S

    def with_s(self, s) -> "RelationParams":
        return RelationParams(self.p, self.q, self.a, self.b, self.c, s)

    def key(self) -> tuple:
        return (self.p, self.q, self.a, self.b, self.c)


@dataclass(frozen=True)
class SignedTuple:
    sign: int
    slots: tuple

    def substitute(self, s0) -> tuple:
        return tuple(s0 if x == S else x for x in self.slots)


# sign exponents (subset of p, q, a, b, c) and slot pattern for each row
_ROWS = (
    ("", "pqsabc"),
    ("p", "pasqcb"),
    ("pa", "qacpsb"),
    ("pac", "qscbap"),
    ("q", "aqbpsc"),
    ("qb", "asbcqp"),
    ("qa", "apbqcs"),
    ("qab", "acbspq"),
    ("qabc", "scpabq"),
    ("pqa", "qpcabs"),
    ("pqac", "qbcspa"),
    ("pqabc", "sbpqca"),
)


def lhs_terms(params: RelationParams) -> list[SignedTuple]:
    """The twelve signed exponent tuples of the left-hand side."""
    vals = {"p": params.p, "q": params.q, "a": params.a, "b": params.b, "c": params.c}
    vals["s"] = S if params.symbolic else params.s
    out = []
    for sign_letters, pattern in _ROWS:
        e = sum(vals[x] for x in sign_letters)
        out.append(SignedTuple((-1) ** e, tuple(vals[x] for x in pattern)))
    return out


def _slot_rank(x):
    return (0, 0) if x == S else (1, x)


def _canonical(t: tuple, symmetric: bool) -> tuple:
    if not symmetric:
        return t

    def key(u):
        return (_slot_rank(u[2]), _slot_rank(u[3]), tuple(_slot_rank(x) for x in u))

    return min((t, mirror(t)), key=key)


def _s_position(t: tuple) -> int:
    return t.index(S) if S in t else len(t)


def _order_key(t: tuple):
    return (_s_position(t), tuple(_slot_rank(x) for x in t))


def _context_symmetric(context) -> bool:
    if isinstance(context, TheoremId):
        return context.symmetric
    text = context.value if isinstance(context, Enum) else str(context)
    if text in ("zero", "lam2", "SO6", "PU4", "A3", "SU4_lam2"):
        return True
    if text in ("lam1", "lam3", "SU4_lam1", "SU4_lam3"):
        return False
    raise DomainError(f"unknown twist context {context!r}")


class SignedTupleList:
    """Integer combination of exponent tuples plus merge and collapse bookkeeping."""

    def __init__(self, entries: dict, symmetric: bool, multiplicity: int = 0, rules=()):
        self._entries = {t: c for t, c in entries.items() if c}
        self.symmetric = symmetric
        self.total_multiplicity = multiplicity
        self.rules = tuple(rules)

    @property
    def terms(self) -> list[tuple[int, tuple]]:
        return [(self._entries[t], t) for t in sorted(self._entries, key=_order_key)]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self._entries)

    def is_empty(self) -> bool:
        return not self._entries

    def coefficient(self, t: tuple) -> int:
        return self._entries.get(_canonical(tuple(t), self.symmetric), 0)

    def __repr__(self):
        body = ", ".join(f"{c:+d}*{t}" for c, t in self.terms)
        return f"SignedTupleList([{body}])"


def merge_terms(terms: Iterable[SignedTuple], twist_context) -> SignedTupleList:
    """Add up equal tuples; symmetric contexts also identify a tuple with its mirror."""
    symmetric = _context_symmetric(twist_context)
    acc: dict = {}
    count = 0
    for t in terms:
        sign, slots = (t.sign, t.slots) if isinstance(t, SignedTuple) else t
        key = _canonical(tuple(slots), symmetric)
        acc[key] = acc.get(key, 0) + sign
        count += 1
    return SignedTupleList(acc, symmetric, count)


# (l-slot, m-slot, (l+m)-slot), both role orders
STUFFLE_TRIPLES = ((0, 1, 3), (1, 0, 3), (1, 2, 4), (2, 1, 4), (0, 4, 5), (4, 0, 5), (2, 3, 5), (3, 2, 5))


def _stuffle_step(entries: dict, symmetric: bool):
    for t in sorted(entries, key=_order_key):
        ca = entries[t]
        for i, j, k in STUFFLE_TRIPLES:
            x, y1, z = t[i], t[j], t[k]
            if S in (x, y1, z) or x < 2:
                continue
            partner = list(t)
            partner[j], partner[k] = y1 + 1, z - 1
            if partner[k] < 1:
                continue
            pkey = _canonical(tuple(partner), symmetric)
            cb = entries.get(pkey, 0)
            if cb == 0 or (cb > 0) == (ca > 0):
                continue
            kappa = min(abs(ca), abs(cb)) * (1 if ca > 0 else -1)
            target = list(t)
            target[i], target[j] = x - 1, y1 + 1
            tkey = _canonical(tuple(target), symmetric)
            return t, pkey, tkey, kappa, (i, j, k)
    return None


def stuffle_collapse(terms) -> SignedTupleList:
    """Apply (x, y-1, z) - (x, y, z-1) = -(x-1, y, z) on additive slot triples until stable."""
    if isinstance(terms, SignedTupleList):
        entries, symmetric, mult = dict(terms._entries), terms.symmetric, terms.total_multiplicity
    else:
        entries, symmetric, mult = {}, False, 0
        for c, t in terms:
            entries[tuple(t)] = entries.get(tuple(t), 0) + c
            mult += abs(c)
    rules = []
    while True:
        step = _stuffle_step(entries, symmetric)
        if step is None:
            break
        a, b, target, kappa, triple = step
        entries[a] -= kappa
        entries[b] += kappa
        entries[target] = entries.get(target, 0) - kappa
        entries = {t: c for t, c in entries.items() if c}
        rules.append((triple, a, b, target, kappa))
    return SignedTupleList(entries, symmetric, mult, rules)


# -- right-hand sides ---------------------------------------------------------

_PAIRS = {
    "J0": (("1", "1"), ("1", "1"), ("1", "1"), ("1", "1")),
    "J2": (("1", "-1"), ("-1", "1"), ("-1", "-1"), ("-1", "-1")),
    "J1": (("-1", "i"), ("-i", "-1"), ("-i", "i"), ("-i", "i")),
    "J3": (("-1", "-i"), ("i", "-1"), ("i", "-i"), ("i", "-i")),
}


@lru_cache(maxsize=8192)
def _t(p: int, shift: int, q: int, x: str, y: str) -> ShiftedCombination:
    return t_closed(p, shift, q, x, y)


@lru_cache(maxsize=256)
def _rhs_part_cached(part: str, p: int, q: int, a: int, b: int, c: int) -> ShiftedCombination:
    pairs = _PAIRS[part]
    if part in ("J0", "J2"):
        w = zeta_value if part == "J0" else phi_value
        step, factor = 2, 2

        def weight(j):
            return w(j)

        flips = (False, False, False, False)
    else:
        sign = "-i" if part == "J1" else "i"
        step, factor = 1, 1

        def weight(j):
            return lambda_value(j, sign)

        flips = (True, False, False, True)

    out = ShiftedCombination()

    def add(coef, w_j, args, pair):
        nonlocal out
        if coef:
            out = out + _t(args[0], args[1], args[2], *pair).scale(w_j * coef)

    # group 1: j <= p
    for j in range(0, p + 1, step):
        w_j = weight(j)
        sj = (-1) ** j if flips[0] else 1
        for om in range(p - j + 1):
            coef = factor * (-1) ** p * sj * comb(om + a - 1, om) * comb(p + c - j - om - 1, c - 1)
            add(coef, w_j, (q + a + om, 0, p + b + c - j - om), pairs[0])
    # group 2: j <= c
    for j in range(0, c + 1, step):
        w_j = weight(j)
        sj = (-1) ** j if flips[1] else 1
        for om in range(c - j + 1):
            coef = factor * (-1) ** (p + a) * sj * comb(om + a - 1, om) * comb(p + c - j - om - 1, p - 1)
            add(coef, w_j, (q, a + om, p + b + c - j - om), pairs[1])
    # groups 3 and 4: j <= a
    for j in range(0, a + 1, step):
        w_j = weight(j)
        s3 = (-1) ** j if flips[2] else 1
        s4 = (-1) ** j if flips[3] else 1
        for om in range(p):
            coef = factor * (-1) ** p * s3 * comb(om + a - j, om) * comb(p + c - 2 - om, c - 1)
            add(coef, w_j, (q + a - j + om + 1, 0, p + b + c - 1 - om), pairs[2])
        for om in range(c):
            coef = factor * (-1) ** (p + a) * s4 * comb(om + a - j, om) * comb(p + c - 2 - om, p - 1)
            add(coef, w_j, (q, a - j + om + 1, p + b + c - 1 - om), pairs[3])
    return out


def rhs_part(part: str, params: RelationParams) -> ShiftedCombination:
    """One of the four right-hand-side blocks J0, J1, J2, J3."""
    if part not in _PAIRS:
        raise DomainError(f"unknown right-hand-side block {part!r}; expected J0, J1, J2 or J3")
    return _rhs_part_cached(part, *params.key())


def theorem_rhs(theorem, params: RelationParams) -> ShiftedCombination:
    th = TheoremId.parse(theorem)
    out = ShiftedCombination()
    for part, w in th.combination.items():
        out = out + rhs_part(part, params).scale(w)
    return out


# -- numeric verification -------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremId
    params: RelationParams
    s_value: float
    lhs: NumericValue
    rhs: NumericValue
    residual: float
    passed: bool
    tolerance: float
    degenerate: bool = False
    merged: tuple = ()
    duration_ms: float = field(default=0.0, compare=False)

    @property
    def status(self) -> str:
        if self.degenerate:
            return "degenerate" if self.passed else "failed"
        return "passed" if self.passed else "failed"


def verify_relation(theorem, params: RelationParams, s0, prec: Precision = DEFAULT_PRECISION,
                    tol: float = 1e-6) -> VerificationReport:
    """Evaluate both sides at s = s0 and compare."""
    th = TheoremId.parse(theorem)
    t0 = time.perf_counter()
    if min(params.key()) < 2:
        raise DomainError("numeric verification needs p, q, a, b, c >= 2")
    s0 = float(s0)
    if s0 < 2:
        raise DomainError("numeric verification needs s >= 2")
    sym = params.with_s(None)
    rows = lhs_terms(sym)
    merged = merge_terms(rows, th)
    lhs = NumericValue(0)
    for row in rows:
        spec = LatticeSeriesSpec(row.substitute(s0), th.twist, th.lattice)
        v = eval_zeta3(spec, prec)
        lhs = lhs + (v if row.sign > 0 else -v)
    rhs = expr_eval_numeric(theorem_rhs(th, sym), s0, prec)
    residual = lhs.distance(rhs)
    passed = residual <= tol + lhs.error_bound + rhs.error_bound
    if merged.is_empty():
        scale = lhs.error_bound + rhs.error_bound
        passed = passed and float(abs(rhs.value)) <= tol + scale and float(abs(lhs.value)) <= tol + scale
    return VerificationReport(
        th, params, s0, lhs, rhs, residual, passed, tol,
        degenerate=merged.is_empty(), merged=tuple(merged.terms),
        duration_ms=(time.perf_counter() - t0) * 1000,
    )


# -- evaluation formulas ---------------------------------------------------------

class Evaluation(NamedTuple):
    exponents: tuple
    value: ConstantExpression


# targets whose collapsed LHS is a tuple plus its mirror image: the formula gives the real part
REAL_PART_TARGETS = (TheoremId.SU4_lam1, TheoremId.SU4_lam3)


def _family_params(k: int) -> RelationParams:
    # (a, b, c, p, q, s) = (2k+1, 2k+1, 2k+1, 2k+1, 2k, 2k+1)
    return RelationParams(p=2 * k + 1, q=2 * k, a=2 * k + 1, b=2 * k + 1, c=2 * k + 1, s=2 * k + 1)


def collapsed_lhs(k: int, target) -> SignedTupleList:
    th = TheoremId.parse(target)
    return stuffle_collapse(merge_terms(lhs_terms(_family_params(k)), th))


def derive_evaluation(k: int, target) -> Evaluation:
    """Closed form of the collapsed series for (a,b,c,p,q,s) = (2k+1,2k+1,2k+1,2k+1,2k,2k+1).

    For the lam1 / lam3 twists the collapsed left-hand side is X + conj(X)
    with X the series at (2k, 2k+1, ..., 2k+1); the returned value is then Re X.
    """
    if int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    k = int(k)
    th = TheoremId.parse(target)
    if th is TheoremId.SO6:
        raise DomainError("the evaluation family is not set up for SO6; combine A3 and SU4_lam2")
    lhs = collapsed_lhs(k, th)
    terms = lhs.terms
    if len(terms) == 1:
        coef, t = terms[0]
    elif th in REAL_PART_TARGETS and len(terms) == 2 and terms[0][0] == terms[1][0] \
            and mirror(terms[0][1]) == terms[1][1]:
        coef, t = 2 * terms[0][0], terms[0][1]
    else:
        raise CollapseError(f"left-hand side did not collapse to one series: {lhs!r}")
    expected = (2 * k,) + (2 * k + 1,) * 5
    if lhs.symmetric and mirror(t) == expected:
        t = expected
    if t != expected:
        raise CollapseError(f"collapsed to {t}, expected {expected}")
    rhs = specialize(theorem_rhs(th, _family_params(k)), 2 * k + 1)
    value = rhs / coef
    if th in REAL_PART_TARGETS:
        value = value.real_part()
    return Evaluation(t, value)


def witten_value(k: int) -> tuple[ConstantExpression, ConstantExpression]:
    """(zeta_3((2k)^6; A3), zeta_W(2k; su(4))) as exact pi^{12k} multiples."""
    if int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    k = int(k)
    params = RelationParams(2 * k, 2 * k, 2 * k, 2 * k, 2 * k, s=2 * k)
    merged = merge_terms(lhs_terms(params), TheoremId.A3)
    terms = merged.terms
    if len(terms) != 1 or terms[0][1] != (2 * k,) * 6:
        raise CollapseError(f"unexpected left-hand side {merged!r}")
    value = specialize(theorem_rhs(TheoremId.A3, params), 2 * k) / terms[0][0]
    return value, value * (12 ** (2 * k))


def lattice_value(k: int, twist, lattice) -> ConstantExpression:
    """zeta_3((2k)^6, twist; lattice) from the relation whose LHS merges to one series."""
    tw, lat = TwistLabel.parse(twist), LatticeLabel.parse(lattice)
    if lat is LatticeLabel.P:
        th = {TwistLabel.ZERO: TheoremId.A3, TwistLabel.LAM1: TheoremId.SU4_lam1,
              TwistLabel.LAM2: TheoremId.SU4_lam2, TwistLabel.LAM3: TheoremId.SU4_lam3}[tw]
        return _all_even_value(k, th)
    # a sublattice sum is a combination of the four twisted sums over P
    out = ConstantExpression()
    for j, w in enumerate(lattice_twist_weights(lat)):
        if w:
            out = out + lattice_value(k, twist_from_index(tw.index + j), LatticeLabel.P) * w
    return out


def evaluate_at(theorem, params: RelationParams) -> tuple[SignedTupleList, ConstantExpression]:
    """Merged LHS and its value when the relation at an integer s merges to one series."""
    th = TheoremId.parse(theorem)
    if params.symbolic or int(params.s) != params.s:
        raise DomainError("evaluate_at needs an integer value of s")
    merged = merge_terms(lhs_terms(params), th)
    terms = merged.terms
    if len(terms) != 1:
        raise CollapseError(f"unexpected left-hand side {merged!r}")
    value = specialize(theorem_rhs(th, params.with_s(None)), int(params.s)) / terms[0][0]
    return merged, value


def _all_even_value(k: int, th: TheoremId) -> ConstantExpression:
    return evaluate_at(th, RelationParams(2 * k, 2 * k, 2 * k, 2 * k, 2 * k, s=2 * k))[1]
