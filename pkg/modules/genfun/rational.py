"""Rational generating functions num(z)/den(z) expanded as formal power series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

import sympy

from modules.core.services.errors import NotExpandableError

from .poly import ONE, Poly, poly_gcd

Number = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class RationalGF:
    """A quotient of polynomials whose denominator does not vanish at zero.

    No gcd reduction is performed on construction; equality compares by
    cross-multiplication so that ``z/(1-z)`` equals ``2z/(2-2z)``.
    """

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        if not isinstance(self.num, Poly) or not isinstance(self.den, Poly):
            raise TypeError("RationalGF needs Poly numerator and denominator")
        if self.den.coefficient(0) == 0:
            raise NotExpandableError(
                f"denominator {self.den.to_text()} vanishes at z = 0; no power series expansion"
            )

    @classmethod
    def from_text(cls, text: str) -> "RationalGF":
        """Parse ``"num/den"``; use ``"num//den"`` when the coefficient lists hold p/q rationals."""

        if "//" in text:
            parts = text.split("//")
        else:
            parts = text.split("/")
        if len(parts) != 2:
            raise ValueError(
                f"malformed rational function {text!r}; expected 'num/den' or 'num//den'"
            )
        return cls(Poly.from_text(parts[0]), Poly.from_text(parts[1]))

    @classmethod
    def from_expr(cls, expr: sympy.Expr) -> "RationalGF":
        """Rational function of ``z`` given as a sympy expression."""

        num, den = sympy.fraction(sympy.together(expr))
        return cls(Poly.from_expr(num), Poly.from_expr(den))

    def as_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    def to_text(self) -> str:
        separator = "/" if self.num.is_integral and self.den.is_integral else "//"
        return f"{self.num.to_text()}{separator}{self.den.to_text()}"

    def equals(self, other: "RationalGF") -> bool:
        return self.num * other.den == other.num * self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def reduced(self) -> "RationalGF":
        """Cancel the common factor and normalise den(0) to 1."""

        common = poly_gcd(self.num, self.den)
        num, den = self.num, self.den
        if not common.is_zero and common.degree > 0:
            num, den = num // common, den // common
        unit = den.coefficient(0)
        return RationalGF(num * (1 / unit), den * (1 / unit))

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return gf_add(self, other)

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return gf_sub(self, other)

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return gf_mul(self, other)

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __repr__(self) -> str:
        return f"RationalGF({self.to_text()})"


def series_coeffs(gf: RationalGF, count: int) -> List[Fraction]:
    """First ``count`` power-series coefficients, driven by the denominator recurrence."""

    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    den = gf.den.coefficients
    lead = den[0]
    series: List[Fraction] = []
    for n in range(count):
        value = gf.num.coefficient(n)
        for i in range(1, min(n, len(den) - 1) + 1):
            value -= den[i] * series[n - i]
        series.append(value / lead)
    return series


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    if a.den == b.den:
        return RationalGF(a.num + b.num, a.den)
    return RationalGF(a.num * b.den + b.num * a.den, a.den * b.den)


def gf_sub(a: RationalGF, b: RationalGF) -> RationalGF:
    return gf_add(a, -b)


def gf_mul(a: RationalGF, b: RationalGF) -> RationalGF:
    return RationalGF(a.num * b.num, a.den * b.den)


def gf_scale(gf: RationalGF, factor: Number) -> RationalGF:
    """Constant multiple."""

    return RationalGF(gf.num * Fraction(factor), gf.den)


def gf_substitute(gf: RationalGF, scale: Number) -> RationalGF:
    """gf(scale * z): the n-th coefficient is multiplied by scale**n."""

    return RationalGF(gf.num.scale_variable(scale), gf.den.scale_variable(scale))


def geometric_gf(ratio: Number) -> RationalGF:
    """1 / (1 - ratio * z)."""

    return RationalGF(ONE, Poly.of(1, -Fraction(ratio)))


FIB_GF = RationalGF(Poly.of(0, 1), Poly.of(1, -1, -1))
LUCAS_GF = RationalGF(Poly.of(2, -1), Poly.of(1, -1, -1))
ZERO_GF = RationalGF(Poly(), ONE)


__all__ = [
    "RationalGF",
    "series_coeffs",
    "gf_add",
    "gf_sub",
    "gf_mul",
    "gf_scale",
    "gf_substitute",
    "geometric_gf",
    "FIB_GF",
    "LUCAS_GF",
    "ZERO_GF",
]
