"""Partial-fraction splitting over the rationals and the four summation decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Tuple

import sympy

from modules.core.services.errors import InternalInconsistencyError

from .poly import ONE, SYMBOL, Poly, poly_xgcd
from .rational import (
    FIB_GF,
    LUCAS_GF,
    RationalGF,
    gf_add,
    gf_mul,
    gf_substitute,
    geometric_gf,
)


def partial_fractions(num: Poly, p: Poly, q: Poly) -> Tuple[RationalGF, RationalGF]:
    """Return (A/p, B/q) with num/(p*q) = A/p + B/q.

    Requires coprime ``p`` and ``q`` and deg num < deg p + deg q. With
    s*p + t*q = 1 from ``sympy.gcdex``, A = num*t mod p and
    B = num*s mod q.
    """

    if num.degree >= p.degree + q.degree:
        raise ValueError(
            f"numerator degree {num.degree} must be below {p.degree + q.degree}"
        )
    g, s, t = poly_xgcd(p, q)
    if g != ONE:
        raise ValueError(f"denominators share the factor {g.to_text()}")
    a_part = (num * t) % p
    b_part = (num * s) % q
    return RationalGF(a_part, p), RationalGF(b_part, q)


@dataclass(frozen=True)
class DecompositionIdentity:
    """A generating function of prefix sums next to its two-term decomposition."""

    label: str
    m: int
    lhs: RationalGF
    rhs: RationalGF

    @property
    def holds(self) -> bool:
        return self.lhs.equals(self.rhs)


SUM_LABELS = ("sum_fib", "sum_lucas", "alt_fib", "alt_lucas")


def summation_gf(label: str, m: int) -> RationalGF:
    """Generating function whose n-th coefficient is the named prefix sum.

    ``sum_*`` sums m^k X_k over k <= n; ``alt_*`` sums (-1)^k m^(n-k) X_k.
    """

    if label == "sum_fib":
        return gf_mul(geometric_gf(1), gf_substitute(FIB_GF, m))
    if label == "sum_lucas":
        return gf_mul(geometric_gf(1), gf_substitute(LUCAS_GF, m))
    if label == "alt_fib":
        return gf_mul(geometric_gf(m), gf_substitute(FIB_GF, -1))
    if label == "alt_lucas":
        return gf_mul(geometric_gf(m), gf_substitute(LUCAS_GF, -1))
    raise ValueError(f"unknown summation {label!r}; expected one of {', '.join(SUM_LABELS)}")


def decompose_sum_gf(label: str, m: int) -> Tuple[RationalGF, RationalGF]:
    """Split ``summation_gf(label, m)`` over its Fibonacci-type and geometric factors.

    The split comes from ``sympy.apart``; a part whose coefficient vanishes
    (the geometric term of ``sum_lucas`` at m = 2) is returned as zero over its
    denominator.
    """

    gf = summation_gf(label, m)
    ratio = 1 if label.startswith("sum_") else m
    geometric_den = Poly.of(1, -ratio)
    fibonacci_pieces: List[RationalGF] = []
    geometric_pieces: List[RationalGF] = []
    for term in sympy.Add.make_args(sympy.apart(gf.as_expr(), SYMBOL)):
        piece = RationalGF.from_expr(term).reduced()
        if piece.den.degree < 1:
            raise InternalInconsistencyError(f"{label} (m={m}) has a polynomial part {piece.to_text()}")
        if piece.den.degree == 1 and (piece.den % geometric_den).is_zero:
            geometric_pieces.append(piece)
        else:
            fibonacci_pieces.append(piece)
    return (
        _combine(fibonacci_pieces, gf.den // geometric_den),
        _combine(geometric_pieces, geometric_den),
    )


def _combine(pieces: List[RationalGF], den: Poly) -> RationalGF:
    if not pieces:
        return RationalGF(Poly(), den)
    return reduce(gf_add, pieces)


def _term(coefficient: Fraction, num: Poly, den: Poly) -> RationalGF:
    return RationalGF(num * coefficient, den)


def _decompositions(m: int, printed: bool) -> List[DecompositionIdentity]:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    d = Fraction(1, m * m + m - 1)
    scaled_den = Poly.of(1, -m, -m * m)
    flipped_den = Poly.of(1, 1, -1)
    one_minus_z = Poly.of(1, -1)
    one_minus_mz = Poly.of(1, -m)
    alt_lucas_sign = -1 if printed else 1

    right_sides = {
        "sum_fib": gf_add(
            _term(m * d, Poly.of(1, m * m), scaled_den),
            _term(-m * d, ONE, one_minus_z),
        ),
        "sum_lucas": gf_add(
            _term(m * d, Poly.of(2 * m + 1, -m * (m - 2)), scaled_den),
            _term((m - 2) * d, ONE, one_minus_z),
        ),
        "alt_fib": gf_add(
            _term(d, Poly.of(m, 1), flipped_den),
            _term(-m * d, ONE, one_minus_mz),
        ),
        "alt_lucas": gf_add(
            _term(d, Poly.of(m - 2, -(2 * m + 1)), flipped_den),
            _term(alt_lucas_sign * m * (2 * m + 1) * d, ONE, one_minus_mz),
        ),
    }
    return [
        DecompositionIdentity(label, m, summation_gf(label, m), right_sides[label])
        for label in SUM_LABELS
    ]


def decomposition_identities(m: int) -> List[DecompositionIdentity]:
    """The four decompositions, with the alternating Lucas one carrying +m(2m+1)/(m^2+m-1)."""

    return _decompositions(m, printed=False)


def printed_decomposition_identities(m: int) -> List[DecompositionIdentity]:
    """Variant with -m(2m+1)/(m^2+m-1) on the alternating Lucas geometric term.

    That sign does not hold; the list is kept for the erratum ledger.
    """

    return _decompositions(m, printed=True)


__all__ = [
    "partial_fractions",
    "DecompositionIdentity",
    "SUM_LABELS",
    "summation_gf",
    "decompose_sum_gf",
    "decomposition_identities",
    "printed_decomposition_identities",
]
