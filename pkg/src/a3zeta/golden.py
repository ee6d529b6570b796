"""Reference values and a reader for the displayed formulas they are written in.

Displays use Python arithmetic syntax with the names ``pi``, ``s``,
``zeta(n)``, ``L4(n)``, ``zeta(s+k)`` and ``L4(s+k)``; powers of two in ``s``
(``2**(-s-8)``, ``2**(-2*s)``) become powers of ``u = 2^-s``.  Only this
grammar is accepted; nothing is passed to ``eval``.
"""
from __future__ import annotations

import ast
import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra.expressions import ConstantExpression, ShiftedCombination, SymbolicCoefficient
from .errors import DomainError
from .exact import GaussianRational

__all__ = ["load_golden", "golden_entry", "read_display"]

GR = GaussianRational


@lru_cache(maxsize=1)
def load_golden() -> dict:
    with resources.files("a3zeta.data").joinpath("golden.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def golden_entry(label: str):
    """Parsed value of a golden entry (ConstantExpression or ShiftedCombination)."""
    data = load_golden()
    if label not in data:
        raise DomainError(f"no golden entry {label!r}")
    return read_display(data[label]["display"])


class _Shifted:
    """Sum over keys None (plain coefficient) or (family, k) of SymbolicCoefficient."""

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    @classmethod
    def scalar(cls, c, pi_pow=0, u_pow=0):
        return cls({None: SymbolicCoefficient.monomial(GR.coerce(c), pi_pow, u_pow)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return _Shifted(out)

    def __neg__(self):
        return _Shifted({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                if k1 is not None and k2 is not None:
                    raise DomainError("a display term has two functions of s")
                k = k1 if k1 is not None else k2
                prod = v1 * v2
                out[k] = out[k] + prod if k in out else prod
        return _Shifted(out)

    def as_rational(self) -> Fraction:
        items = list(self.terms.items())
        if not items:
            return Fraction(0)
        if len(items) != 1 or items[0][0] is not None:
            raise DomainError("only rational divisors are supported")
        coeff = items[0][1].items()
        if len(coeff) != 1 or coeff[0][0] != (0, 0) or coeff[0][1].im != 0:
            raise DomainError("only rational divisors are supported")
        return coeff[0][1].re

    def result(self) -> ShiftedCombination:
        if None in self.terms:
            raise DomainError("a display term has no function of s")
        return ShiftedCombination(self.terms)


def _linear_in_s(node) -> tuple[Fraction, Fraction]:
    """Exponent a*s + b as (a, b)."""
    if isinstance(node, ast.Name) and node.id == "s":
        return Fraction(1), Fraction(0)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(0), Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        a, b = _linear_in_s(node.operand)
        return -a, -b
    if isinstance(node, ast.BinOp):
        la, lb = _linear_in_s(node.left)
        ra, rb = _linear_in_s(node.right)
        if isinstance(node.op, ast.Add):
            return la + ra, lb + rb
        if isinstance(node.op, ast.Sub):
            return la - ra, lb - rb
        if isinstance(node.op, ast.Mult) and (la == 0 or ra == 0):
            return la * rb + ra * lb, lb * rb
    raise DomainError(f"unsupported exponent {ast.unparse(node)!r}")


def _int_const(node) -> int:
    a, b = _linear_in_s(node)
    if a != 0 or b.denominator != 1:
        raise DomainError(f"expected an integer, got {ast.unparse(node)!r}")
    return int(b)


class _Reader:
    def __init__(self, shifted: bool):
        self.shifted = shifted

    def const(self, c, pi_pow=0):
        if self.shifted:
            return _Shifted.scalar(c, pi_pow)
        return ConstantExpression.pi_power(pi_pow, c)

    def visit(self, node):
        if isinstance(node, ast.Expression):
            return self.visit(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return self.const(node.value)
        if isinstance(node, ast.Name):
            if node.id == "pi":
                return self.const(1, 1)
            if node.id == "i":
                return self.const(GR(0, 1))
            raise DomainError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -self.visit(node.operand)
            if isinstance(node.op, ast.UAdd):
                return self.visit(node.operand)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                return self.power(node.left, node.right)
            left, right = self.visit(node.left), self.visit(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left + (-right)
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                d = right.as_rational() if self.shifted else right.as_rational_pi()
                if not self.shifted:
                    if d is None or d[1] != 0:
                        raise DomainError("only rational divisors are supported")
                    d = d[0]
                return left * self.const(1 / Fraction(d))
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and len(node.args) == 1:
            return self.call(node.func.id, node.args[0])
        raise DomainError(f"unsupported display fragment {ast.unparse(node)!r}")

    def power(self, base, exponent):
        if isinstance(base, ast.Constant) and base.value == 2:
            a, b = _linear_in_s(exponent)
            if a > 0 or a.denominator != 1:
                raise DomainError("powers of two must have the form 2**(-k*s + b)")
            if a != 0 and not self.shifted:
                raise DomainError("u appears in a display without functions of s")
            c = Fraction(2) ** int(b) if b.denominator == 1 else None
            if c is None:
                raise DomainError("non-integer power of two")
            return _Shifted.scalar(c, 0, int(-a)) if self.shifted else self.const(c)
        n = _int_const(exponent)
        if n < 0:
            raise DomainError("negative powers are not supported")
        if isinstance(base, ast.Name) and base.id == "pi":
            return self.const(1, n)
        value = self.const(1)
        b = self.visit(base)
        for _ in range(n):
            value = value * b
        return value

    def call(self, name, arg):
        if name not in ("zeta", "L4"):
            raise DomainError(f"unknown function {name!r}")
        a, b = _linear_in_s(arg)
        if b.denominator != 1:
            raise DomainError("arguments must be integers or s + integer")
        if a == 0:
            e = ConstantExpression.zeta(int(b)) if name == "zeta" else ConstantExpression.L4(int(b))
            if not self.shifted:
                return e
            r = e.as_rational_pi()
            if r is None:
                raise DomainError(f"{name}({int(b)}) is not a rational multiple of a pi power")
            return _Shifted.scalar(r[0], r[1])
        if a != 1 or not self.shifted:
            raise DomainError("functions of s must have argument s + k")
        return _Shifted({(name, int(b)): SymbolicCoefficient.monomial(1)})


def _mentions_s(tree) -> bool:
    return any(isinstance(n, ast.Name) and n.id == "s" for n in ast.walk(tree))


def read_display(text: str):
    """Read a displayed formula into a ConstantExpression or a ShiftedCombination."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot read display: {exc.msg}") from None
    shifted = _mentions_s(tree)
    value = _Reader(shifted).visit(tree)
    return value.result() if shifted else value
