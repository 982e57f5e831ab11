"""Dense univariate polynomials with exact rational coefficients.

``Poly`` keeps its coefficients as a tuple of ``Fraction`` values (lowest degree
first) so that generating-function code can read them directly; the arithmetic
itself runs on ``sympy.Poly`` over ``QQ``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Tuple, Union

import sympy
from sympy import QQ

Number = Union[int, Fraction]

SYMBOL = sympy.Symbol("z")


def _normalize(coefficients: Iterable[Number]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _to_rational(value: Number) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@dataclass(frozen=True)
class Poly:
    """Coefficients indexed by degree, trailing zeros stripped; the zero polynomial is empty."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def of(cls, *coefficients: Number) -> "Poly":
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value: Number) -> "Poly":
        return cls((value,))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "Poly":
        return cls(tuple(_to_fraction(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_expr(cls, expr: sympy.Expr) -> "Poly":
        """Polynomial in ``z`` given as a sympy expression."""

        return cls.from_sympy(sympy.Poly(expr, SYMBOL, domain=QQ))

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        """Parse comma-separated integers or ``p/q`` rationals, lowest degree first."""

        tokens = [token.strip() for token in text.split(",")]
        if not tokens or any(not token for token in tokens):
            raise ValueError(f"malformed coefficient list {text!r}")
        try:
            return cls(tuple(Fraction(token) for token in tokens))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed coefficient list {text!r}") from None

    @cached_property
    def as_sympy(self) -> sympy.Poly:
        highest_first = [_to_rational(c) for c in reversed(self.coefficients)]
        return sympy.Poly.from_list(highest_first or [0], SYMBOL, domain=QQ)

    def as_expr(self) -> sympy.Expr:
        return self.as_sympy.as_expr()

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coefficients) or "0"

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""

        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return Fraction(0)

    def __call__(self, point: Number) -> Fraction:
        return _to_fraction(self.as_sympy.eval(_to_rational(point)))

    def __add__(self, other: "Poly | Number") -> "Poly":
        return Poly.from_sympy(self.as_sympy + _lift(other).as_sympy)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return Poly.from_sympy(self.as_sympy - _lift(other).as_sympy)

    def __rsub__(self, other: Number) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        return Poly.from_sympy(self.as_sympy * _lift(other).as_sympy)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = sympy.div(self.as_sympy, divisor.as_sympy)
        return Poly.from_sympy(quotient), Poly.from_sympy(remainder)

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[1]

    def scale_variable(self, scale: Number) -> "Poly":
        """p(scale * z)."""

        inner = sympy.Poly.from_list([_to_rational(scale), 0], SYMBOL, domain=QQ)
        return Poly.from_sympy(self.as_sympy.compose(inner))

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def _lift(value: "Poly | Number") -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g and g monic (zero only when a = b = 0)."""

    if a.is_zero and b.is_zero:
        return Poly(), Poly(), Poly()
    s, t, g = sympy.gcdex(a.as_sympy, b.as_sympy)
    return Poly.from_sympy(g), Poly.from_sympy(s), Poly.from_sympy(t)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""

    if a.is_zero and b.is_zero:
        return Poly()
    return Poly.from_sympy(sympy.gcd(a.as_sympy, b.as_sympy).monic())


ONE = Poly.constant(1)


__all__ = ["Poly", "poly_xgcd", "poly_gcd", "ONE", "SYMBOL"]
