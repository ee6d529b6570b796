"""Exact symbolic values.

Two shapes cover everything the relations produce:

* :class:`ConstantExpression` -- finite sums ``c * pi^a * prod zeta(n_i) * prod L(m_j, chi_4)``
  with Gaussian-rational ``c``.  In normal form every ``zeta`` argument is odd
  and >= 3 and every ``L4`` argument is even and >= 2; all other values are
  rational multiples of a power of pi and are folded into the coefficient.
* :class:`ShiftedCombination` -- ``sum_k c_k(pi, u) * F(s + k)`` with
  ``F in {zeta, L4}`` and ``u = 2**-s``; the coefficients are
  :class:`SymbolicCoefficient` polynomials in ``pi`` and ``u``.

Both render to a canonical text form that :func:`parse_constant` and
:func:`parse_shifted` read back exactly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DomainError, SingularityError
from ..exact import (
    GaussianRational,
    L4_odd_coefficient,
    as_fraction,
    format_gaussian,
    zeta_even_coefficient,
)

__all__ = [
    "FAMILIES",
    "ConstMonomial",
    "ConstantExpression",
    "SymbolicCoefficient",
    "ShiftedCombination",
    "normalize",
    "parse_constant",
    "parse_shifted",
    "parse_gaussian",
]

FAMILIES = ("zeta", "L4")
_FAMILY_ORDER = {f: n for n, f in enumerate(FAMILIES)}

GR = GaussianRational
_ZERO = GR(0)
_ONE = GR(1)


def _factor_key(factor):
    family, arg = factor
    return (_FAMILY_ORDER[family], arg)


@dataclass(frozen=True)
class ConstMonomial:
    pi_pow: int = 0
    factors: tuple = ()

    def __post_init__(self):
        if self.pi_pow < 0:
            raise DomainError("negative power of pi")
        for family, _ in self.factors:
            if family not in _FAMILY_ORDER:
                raise DomainError(f"unknown constant family {family!r}")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=_factor_key)))

    def __mul__(self, other: "ConstMonomial") -> "ConstMonomial":
        return ConstMonomial(self.pi_pow + other.pi_pow, self.factors + other.factors)

    def sort_key(self):
        return (len(self.factors), tuple(_factor_key(f) for f in self.factors), self.pi_pow)

    def is_normal(self) -> bool:
        return all(_irreducible(f, a) for f, a in self.factors)


def _irreducible(family: str, arg: int) -> bool:
    if family == "zeta":
        return arg >= 3 and arg % 2 == 1
    return arg >= 2 and arg % 2 == 0


def _reduce_factor(family: str, arg: int):
    """Return (rational, pi_pow) for reducible factors, None for symbolic ones."""
    if family == "zeta":
        if arg == 1:
            raise SingularityError("zeta(1) is a pole")
        if arg < 0 or (arg % 2 and arg < 1):
            raise DomainError(f"zeta({arg}) is outside the supported domain")
        if arg % 2 == 0:
            return zeta_even_coefficient(arg), arg
        return None
    if arg < 1:
        raise DomainError(f"L({arg}, chi_4) is outside the supported domain")
    if arg % 2:
        return L4_odd_coefficient(arg), arg
    return None


class ConstantExpression:
    """Exact linear combination of constant monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ConstMonomial, GaussianRational] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = GR.coerce(c)
            if not c.is_zero():
                clean[mono] = c
        self._terms = clean

    # construction -------------------------------------------------------
    @classmethod
    def from_raw(cls, items: Iterable[tuple[ConstMonomial, GaussianRational]]) -> "ConstantExpression":
        """Accumulate possibly unnormalised monomials and reduce them."""
        acc: dict[ConstMonomial, GaussianRational] = {}
        for mono, c in items:
            c = GR.coerce(c)
            pi_pow = mono.pi_pow
            kept = []
            for family, arg in mono.factors:
                red = _reduce_factor(family, arg)
                if red is None:
                    kept.append((family, arg))
                else:
                    r, k = red
                    c = c * r
                    pi_pow += k
            key = ConstMonomial(pi_pow, tuple(kept))
            acc[key] = acc.get(key, _ZERO) + c
        return cls(acc)

    @classmethod
    def constant(cls, c) -> "ConstantExpression":
        return cls({ConstMonomial(): GR.coerce(c)})

    @classmethod
    def pi_power(cls, n: int, coeff=1) -> "ConstantExpression":
        return cls({ConstMonomial(n): GR.coerce(coeff)})

    @classmethod
    def zeta(cls, n: int) -> "ConstantExpression":
        return cls.from_raw([(ConstMonomial(0, (("zeta", n),)), _ONE)])

    @classmethod
    def L4(cls, n: int) -> "ConstantExpression":
        return cls.from_raw([(ConstMonomial(0, (("L4", n),)), _ONE)])

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[ConstMonomial, GaussianRational]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self._terms.values())

    def is_pure_pi(self) -> bool:
        return all(not m.factors for m in self._terms)

    def degree(self) -> int:
        return max((len(m.factors) for m in self._terms), default=0)

    def as_rational_pi(self):
        """(rational, pi_pow) when the expression is ``r * pi^a`` with real ``r``."""
        if self.is_zero():
            return Fraction(0), 0
        if len(self._terms) != 1:
            return None
        (mono, c), = self._terms.items()
        if mono.factors or c.im != 0:
            return None
        return c.re, mono.pi_pow

    def coefficient(self, pi_pow: int = 0, factors=()) -> GaussianRational:
        return self._terms.get(ConstMonomial(pi_pow, tuple(factors)), _ZERO)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ConstantExpression):
            return other
        try:
            return ConstantExpression.constant(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in o._terms.items():
            acc[m] = acc.get(m, _ZERO) + c
        return ConstantExpression(acc)

    __radd__ = __add__

    def __neg__(self):
        return ConstantExpression({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ConstantExpression):
            acc: dict[ConstMonomial, GaussianRational] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    acc[m] = acc.get(m, _ZERO) + c1 * c2
            return ConstantExpression(acc)
        try:
            c = GR.coerce(other)
        except TypeError:
            return NotImplemented
        return ConstantExpression({m: v * c for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = GR.coerce(other)
        return ConstantExpression({m: v / c for m, v in self._terms.items()})

    def conj(self) -> "ConstantExpression":
        return ConstantExpression({m: c.conj() for m, c in self._terms.items()})

    def real_part(self) -> "ConstantExpression":
        return ConstantExpression({m: GR(c.re) for m, c in self._terms.items()})

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, ConstantExpression) else other
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"ConstantExpression({self.render()!r})"

    def __str__(self):
        return self.render()

    # text / json --------------------------------------------------------
    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_const_term(m, c) for m, c in self.items())

    def pretty(self) -> str:
        """Human-oriented rendering (not parseable)."""
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            body = []
            if m.pi_pow:
                body.append("π" + (_superscript(m.pi_pow) if m.pi_pow != 1 else ""))
            for f, a in m.factors:
                body.append(f"ζ({a})" if f == "zeta" else f"L({a},χ₄)")
            parts.append(_pretty_coeff(c, bool(body)) + "·".join(body))
        out = parts[0]
        for p in parts[1:]:
            out += (" − " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": {"re": _frac_str(c.re), "im": _frac_str(c.im)},
                    "pi_pow": m.pi_pow,
                    "factors": [{"family": f, "arg": a} for f, a in m.factors],
                }
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "ConstantExpression":
        items = []
        for t in doc["terms"]:
            c = GR(Fraction(t["coeff"]["re"]), Fraction(t["coeff"]["im"]))
            factors = tuple((f["family"], int(f["arg"])) for f in t.get("factors", []))
            items.append((ConstMonomial(int(t["pi_pow"]), factors), c))
        return cls.from_raw(items)


def normalize(expr: ConstantExpression) -> ConstantExpression:
    """Fold every reducible zeta/L factor into pi powers (idempotent)."""
    return ConstantExpression.from_raw(expr._terms.items())


class SymbolicCoefficient:
    """Polynomial in ``pi`` and ``u = 2**-s`` with Gaussian-rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], GaussianRational] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise DomainError("pi and u exponents must be non-negative")
            c = GR.coerce(c)
            if not c.is_zero():
                clean[(a, b)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, coeff=1, pi_pow: int = 0, u_pow: int = 0) -> "SymbolicCoefficient":
        return cls({(pi_pow, u_pow): GR.coerce(coeff)})

    @property
    def terms(self) -> dict[tuple[int, int], GaussianRational]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], -kv[0][1]))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SymbolicCoefficient"):
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, _ZERO) + c
        return SymbolicCoefficient(acc)

    def __neg__(self):
        return SymbolicCoefficient({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymbolicCoefficient):
            acc: dict[tuple[int, int], GaussianRational] = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    k = (a1 + a2, b1 + b2)
                    acc[k] = acc.get(k, _ZERO) + c1 * c2
            return SymbolicCoefficient(acc)
        try:
            c = GR.coerce(other)
        except TypeError:
            return NotImplemented
        return SymbolicCoefficient({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def conj(self):
        return SymbolicCoefficient({k: c.conj() for k, c in self._terms.items()})

    def at_u(self, u: Fraction) -> ConstantExpression:
        """Substitute a rational value for ``u``; the result is a pure pi polynomial."""
        acc: dict[ConstMonomial, GaussianRational] = {}
        for (a, b), c in self._terms.items():
            m = ConstMonomial(a)
            acc[m] = acc.get(m, _ZERO) + c * (u ** b)
        return ConstantExpression(acc)

    def __eq__(self, other):
        if not isinstance(other, SymbolicCoefficient):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_sym_term(a, b, c) for (a, b), c in self.items())

    def __repr__(self):
        return f"SymbolicCoefficient({self.render()!r})"


class ShiftedCombination:
    """``sum c_{F,k}(pi, u) * F(s + k)`` for ``F`` in ``zeta``/``L4``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[str, int], SymbolicCoefficient] | None = None):
        clean = {}
        for (family, shift), c in (terms or {}).items():
            if family not in _FAMILY_ORDER:
                raise DomainError(f"unknown function family {family!r}")
            if not c.is_zero():
                clean[(family, shift)] = c
        self._terms = clean

    @classmethod
    def single(cls, family: str, shift: int, coeff: SymbolicCoefficient | None = None):
        return cls({(family, shift): coeff if coeff is not None else SymbolicCoefficient.monomial()})

    @property
    def terms(self) -> dict[tuple[str, int], SymbolicCoefficient]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], _FAMILY_ORDER[kv[0][0]]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(c.im == 0 for sc in self._terms.values() for c in sc._terms.values())

    def shifts(self) -> list[int]:
        return sorted({k for _, k in self._terms})

    def coefficient(self, family: str, shift: int) -> SymbolicCoefficient:
        return self._terms.get((family, shift), SymbolicCoefficient())

    def __add__(self, other: "ShiftedCombination"):
        if not isinstance(other, ShiftedCombination):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return ShiftedCombination(acc)

    def __neg__(self):
        return ShiftedCombination({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "ShiftedCombination":
        """Multiply by a Gaussian rational, a SymbolicCoefficient or a pure-pi constant."""
        if isinstance(factor, ConstantExpression):
            if not factor.is_pure_pi():
                raise DomainError("shifted combinations only absorb pure pi-power constants")
            sc = SymbolicCoefficient({(m.pi_pow, 0): c for m, c in factor.terms.items()})
        elif isinstance(factor, SymbolicCoefficient):
            sc = factor
        else:
            sc = SymbolicCoefficient.monomial(factor)
        return ShiftedCombination({k: c * sc for k, c in self._terms.items()})

    def __mul__(self, other):
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.scale(GR(1) / GR.coerce(other))

    def conj(self) -> "ShiftedCombination":
        return ShiftedCombination({k: c.conj() for k, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ShiftedCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"[{c.render()}]*{family}({_shift_arg(shift)})" for (family, shift), c in self.items()
        )

    def __repr__(self):
        return f"ShiftedCombination({self.render()!r})"

    def __str__(self):
        return self.render()

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "family": family,
                    "shift": shift,
                    "coeff": [
                        {"pi_pow": a, "u_pow": b, "re": _frac_str(c.re), "im": _frac_str(c.im)}
                        for (a, b), c in sc.items()
                    ],
                }
                for (family, shift), sc in self.items()
            ]
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "ShiftedCombination":
        terms = {}
        for t in doc["terms"]:
            sc = SymbolicCoefficient(
                {
                    (int(x["pi_pow"]), int(x["u_pow"])): GR(Fraction(x["re"]), Fraction(x["im"]))
                    for x in t["coeff"]
                }
            )
            key = (t["family"], int(t["shift"]))
            terms[key] = terms[key] + sc if key in terms else sc
        return cls(terms)


# -- rendering helpers ----------------------------------------------------

def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def _shift_arg(k: int) -> str:
    if k == 0:
        return "s"
    return f"s+{k}" if k > 0 else f"s-{-k}"


def _render_const_term(m: ConstMonomial, c: GaussianRational) -> str:
    out = f"({format_gaussian(c)})"
    if m.pi_pow:
        out += f"*pi^{m.pi_pow}"
    for f, a in m.factors:
        out += f"*{f}({a})"
    return out


def _render_sym_term(a: int, b: int, c: GaussianRational) -> str:
    out = f"({format_gaussian(c)})"
    if a:
        out += f"*pi^{a}"
    if b:
        out += f"*u^{b}"
    return out


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


def _pretty_coeff(c: GaussianRational, has_body: bool) -> str:
    if c.im == 0:
        if has_body and c.re == 1:
            return ""
        if has_body and c.re == -1:
            return "-"
        return _frac_str(c.re) + ("·" if has_body else "")
    return f"({format_gaussian(c)})" + ("·" if has_body else "")


# -- parsing ----------------------------------------------------------------

_RAT = r"-?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-]\d+(?:/\d+)?)\*i|(?P<only_im>{_RAT})\*i|(?P<only_re>{_RAT}))$"
)


def parse_gaussian(text: str) -> GaussianRational:
    m = _GAUSS_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed Gaussian rational {text!r}")
    if m.group("only_re") is not None:
        return GR(Fraction(m.group("only_re")))
    if m.group("only_im") is not None:
        return GR(0, Fraction(m.group("only_im")))
    return GR(Fraction(m.group("re")), Fraction(m.group("im")))


def _split_top(text: str, sep: str = " + ") -> list[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


_CONST_TERM = re.compile(r"^\((?P<c>[^()]+)\)(?P<rest>(?:\*(?:pi\^\d+|zeta\(\d+\)|L4\(\d+\)))*)$")
_SYM_TERM = re.compile(r"^\((?P<c>[^()]+)\)(?:\*pi\^(?P<a>\d+))?(?:\*u\^(?P<b>\d+))?$")
_SHIFT_TERM = re.compile(r"^\[(?P<coef>.*)\]\*(?P<fam>zeta|L4)\(s(?:(?P<sign>[+-])(?P<k>\d+))?\)$")


def parse_constant(text: str) -> ConstantExpression:
    text = text.strip()
    if text == "0":
        return ConstantExpression()
    items = []
    for part in _split_top(text):
        m = _CONST_TERM.match(part.strip())
        if not m:
            raise ValueError(f"malformed constant term {part!r}")
        pi_pow, factors = 0, []
        for tok in re.findall(r"pi\^\d+|zeta\(\d+\)|L4\(\d+\)", m.group("rest")):
            if tok.startswith("pi"):
                pi_pow += int(tok[3:])
            else:
                fam, arg = tok[:-1].split("(")
                factors.append((fam, int(arg)))
        items.append((ConstMonomial(pi_pow, tuple(factors)), parse_gaussian(m.group("c"))))
    return ConstantExpression.from_raw(items)


def _parse_symbolic(text: str) -> SymbolicCoefficient:
    acc: dict[tuple[int, int], GaussianRational] = {}
    if text.strip() == "0":
        return SymbolicCoefficient()
    for part in _split_top(text):
        m = _SYM_TERM.match(part.strip())
        if not m:
            raise ValueError(f"malformed coefficient term {part!r}")
        key = (int(m.group("a") or 0), int(m.group("b") or 0))
        acc[key] = acc.get(key, _ZERO) + parse_gaussian(m.group("c"))
    return SymbolicCoefficient(acc)


def parse_shifted(text: str) -> ShiftedCombination:
    text = text.strip()
    if text == "0":
        return ShiftedCombination()
    terms: dict[tuple[str, int], SymbolicCoefficient] = {}
    for part in _split_top(text):
        m = _SHIFT_TERM.match(part.strip())
        if not m:
            raise ValueError(f"malformed shifted term {part!r}")
        k = int(m.group("k") or 0) * (-1 if m.group("sign") == "-" else 1)
        key = (m.group("fam"), k)
        sc = _parse_symbolic(m.group("coef"))
        terms[key] = terms[key] + sc if key in terms else sc
    return ShiftedCombination(terms)


def rational(x) -> Fraction:
    return as_fraction(x)
