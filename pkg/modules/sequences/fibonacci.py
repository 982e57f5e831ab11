"""Fibonacci and Lucas numbers plus the elementary identities tying them together."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from .cfinite import CFiniteSpec, cfinite_eval

FIBONACCI = CFiniteSpec.of([1, 1], [0, 1])
LUCAS = CFiniteSpec.of([1, 1], [2, 1])


@lru_cache(maxsize=1024)
def fib(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""

    return cfinite_eval(FIBONACCI, n)


@lru_cache(maxsize=1024)
def lucas(n: int) -> int:
    """L_n with L_0 = 2, L_1 = 1."""

    return cfinite_eval(LUCAS, n)


def fib_lucas_pair(n: int) -> Tuple[int, int]:
    """Return (F_n, L_n) by index doubling, independently of the recurrence walk."""

    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    f, l = 0, 2
    sign = 1  # (-1)**k for the prefix k read so far
    for bit in bin(n)[2:]:
        # k -> 2k
        f, l = f * l, l * l - 2 * sign
        sign = 1
        if bit == "1":
            # 2k -> 2k + 1
            f, l = (f + l) // 2, (5 * f + l) // 2
            sign = -1
    return f, l


def check_lemma1(n: int) -> bool:
    """Whether L_n = F_{n-1} + F_{n+1}."""

    if n < 1:
        raise ValueError(f"L_n = F(n-1) + F(n+1) needs n >= 1, got {n}")
    return lucas(n) == fib(n - 1) + fib(n + 1)


def check_pell(n: int) -> bool:
    """Whether L_n^2 - 5 F_n^2 = 4 (-1)^n."""

    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return lucas(n) ** 2 - 5 * fib(n) ** 2 == 4 * (-1) ** n


def is_lucas_fibonacci_pair(x: int, y: int) -> Optional[int]:
    """Return n when (x, y) = (L_n, F_n), otherwise None.

    Non-negative solutions of x^2 - 5y^2 = 4(-1)^n are exactly the pairs (L_n, F_n).
    """

    if x < 0 or y < 0:
        return None
    norm = x * x - 5 * y * y
    if norm not in (4, -4):
        return None
    f, f_next, l, l_next = 0, 1, 2, 1
    n = 0
    while f <= y:
        if f == y and l == x:
            return n if norm == 4 * (-1) ** n else None
        f, f_next = f_next, f + f_next
        l, l_next = l_next, l + l_next
        n += 1
    return None


__all__ = [
    "FIBONACCI",
    "LUCAS",
    "fib",
    "lucas",
    "fib_lucas_pair",
    "check_lemma1",
    "check_pell",
    "is_lucas_fibonacci_pair",
]
