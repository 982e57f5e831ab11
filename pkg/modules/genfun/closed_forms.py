"""Closed forms for weighted Fibonacci and Lucas prefix sums, with summation oracles."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Union

from modules.core.services.errors import InternalInconsistencyError
from modules.sequences import fib, lucas

logger = logging.getLogger(__name__)


class SequenceKind(str, Enum):
    FIB = "fib"
    LUCAS = "lucas"


KindLike = Union[SequenceKind, str]


def as_kind(kind: KindLike) -> SequenceKind:
    try:
        return SequenceKind(kind)
    except ValueError:
        raise ValueError(f"unknown sequence {kind!r}; expected 'fib' or 'lucas'") from None


def _term(kind: SequenceKind, k: int) -> int:
    return fib(k) if kind is SequenceKind.FIB else lucas(k)


def _check(n: int, m: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")


def _as_integer(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise InternalInconsistencyError(f"{label} evaluated to the non-integer {value}")
    return value.numerator


def direct_sum(kind: KindLike, n: int, m: int) -> int:
    """Sum of m^k X_k for k = 0..n."""

    kind = as_kind(kind)
    total = 0
    power = 1
    for k in range(n + 1):
        total += power * _term(kind, k)
        power *= m
    return total


def direct_alt_sum(kind: KindLike, n: int, m: int) -> int:
    """Sum of (-1)^k m^(n-k) X_k for k = 0..n."""

    kind = as_kind(kind)
    total = 0
    for k in range(n + 1):
        total = total * m + (-1) ** k * _term(kind, k)
    return total


def printed_closed_form_sum(kind: KindLike, n: int, m: int) -> Fraction:
    kind = as_kind(kind)
    _check(n, m)
    d = m * m + m - 1
    scale = Fraction(m ** (n + 1), d)
    if kind is SequenceKind.FIB:
        return scale * (fib(n + 1) + m * fib(n)) - Fraction(m, d)
    return scale * ((2 * m + 1) * fib(n + 1) - (m - 2) * fib(n)) + Fraction(m - 2, d)


def closed_form_sum(kind: KindLike, n: int, m: int) -> int:
    """Closed form of ``direct_sum``; the denominator m^2+m-1 always cancels."""

    kind = as_kind(kind)
    return _as_integer(printed_closed_form_sum(kind, n, m), f"closed form of the {kind.value} sum")


def closed_form_alt(kind: KindLike, n: int, m: int) -> int:
    """Closed form of ``direct_alt_sum``.

    fib:   ((-1)^n [m F(n+1) - F(n)] - m^(n+1)) / (m^2+m-1)
    lucas: ((-1)^n [(m-2) F(n+1) + (2m+1) F(n)] + (2m+1) m^(n+1)) / (m^2+m-1)
    """

    kind = as_kind(kind)
    _check(n, m)
    d = m * m + m - 1
    sign = (-1) ** n
    if kind is SequenceKind.FIB:
        value = Fraction(sign * (m * fib(n + 1) - fib(n)) - m ** (n + 1), d)
    else:
        value = Fraction(
            sign * ((m - 2) * fib(n + 1) + (2 * m + 1) * fib(n)) + (2 * m + 1) * m ** (n + 1),
            d,
        )
    return _as_integer(value, f"closed form of the alternating {kind.value} sum")


def printed_closed_form_alt(kind: KindLike, n: int, m: int) -> Fraction:
    """Alternating closed forms with the bracket signs flipped, evaluated exactly.

    fib:   (-1)^(n+1) [m F(n+1) + F(n)] / d - m^(n+1) / d
    lucas: (-1)^(n+1) [(m-2) F(n+1) - (2m+1) F(n)] / d + (2m+1) m^(n+1) / d
    These disagree with the direct sums; they are kept for the erratum ledger.
    """

    kind = as_kind(kind)
    _check(n, m)
    d = m * m + m - 1
    sign = (-1) ** (n + 1)
    if kind is SequenceKind.FIB:
        return Fraction(sign * (m * fib(n + 1) + fib(n)), d) - Fraction(m ** (n + 1), d)
    return Fraction(sign * ((m - 2) * fib(n + 1) - (2 * m + 1) * fib(n)), d) + Fraction(
        (2 * m + 1) * m ** (n + 1), d
    )


@dataclass(frozen=True)
class ErratumEntry:
    kind: SequenceKind
    n: int
    m: int
    printed: Fraction
    corrected: int
    direct: int

    @property
    def printed_matches(self) -> bool:
        return self.printed == self.direct

    @property
    def corrected_matches(self) -> bool:
        return self.corrected == self.direct

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "m": self.m,
            "printed": str(self.printed),
            "corrected": str(self.corrected),
            "direct": str(self.direct),
        }


def erratum_ledger(m: int, n: int) -> List[ErratumEntry]:
    """Printed, corrected and directly summed alternating values at (m, n) for both sequences."""

    entries = []
    for kind in SequenceKind:
        entry = ErratumEntry(
            kind=kind,
            n=n,
            m=m,
            printed=printed_closed_form_alt(kind, n, m),
            corrected=closed_form_alt(kind, n, m),
            direct=direct_alt_sum(kind, n, m),
        )
        if not entry.printed_matches:
            logger.debug(
                "Printed alternating %s form gives %s at m=%d n=%d; direct sum is %d",
                kind.value,
                entry.printed,
                m,
                n,
                entry.direct,
            )
        entries.append(entry)
    return entries


__all__ = [
    "SequenceKind",
    "as_kind",
    "direct_sum",
    "direct_alt_sum",
    "closed_form_sum",
    "closed_form_alt",
    "printed_closed_form_sum",
    "printed_closed_form_alt",
    "ErratumEntry",
    "erratum_ledger",
]
