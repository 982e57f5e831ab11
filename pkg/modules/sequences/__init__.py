"""Exact Fibonacci/Lucas values and generic C-finite evaluation."""

from .cfinite import CFiniteSpec, cfinite_eval, cfinite_eval_matrix
from .fibonacci import (
    FIBONACCI,
    LUCAS,
    check_lemma1,
    check_pell,
    fib,
    fib_lucas_pair,
    is_lucas_fibonacci_pair,
    lucas,
)

__all__ = [
    "CFiniteSpec",
    "cfinite_eval",
    "cfinite_eval_matrix",
    "FIBONACCI",
    "LUCAS",
    "fib",
    "lucas",
    "fib_lucas_pair",
    "check_lemma1",
    "check_pell",
    "is_lucas_fibonacci_pair",
]
