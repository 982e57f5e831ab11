"""Linear recurrences with constant coefficients (C-finite sequences).

A CFiniteSpec stores a recurrence ``a(n+d) = sum(c[i] * a(n+i))`` together with
its first ``d`` terms. Values are exact Python integers throughout; the closure
operations below build the recurrences the identity certificates rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class CFiniteSpec:
    """Recurrence coefficients plus initial terms of a C-finite sequence."""

    coefficients: Tuple[int, ...]
    initials: Tuple[int, ...]

    def __post_init__(self) -> None:
        coefficients = tuple(int(c) for c in self.coefficients)
        initials = tuple(int(v) for v in self.initials)
        if not coefficients:
            raise ValueError("a C-finite recurrence needs order >= 1")
        if len(coefficients) != len(initials):
            raise ValueError(
                f"recurrence of order {len(coefficients)} needs {len(coefficients)} initial terms, "
                f"got {len(initials)}"
            )
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "initials", initials)

    @classmethod
    def of(cls, coefficients: Sequence[int], initials: Sequence[int]) -> "CFiniteSpec":
        return cls(tuple(coefficients), tuple(initials))

    @classmethod
    def from_characteristic(cls, polynomial: Sequence[int], initials: Sequence[int]) -> "CFiniteSpec":
        """Build a recurrence from a monic characteristic polynomial (lowest degree first)."""

        if not polynomial or polynomial[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")
        return cls(tuple(-c for c in polynomial[:-1]), tuple(initials))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def characteristic_polynomial(self) -> List[int]:
        """Coefficients of x^d - sum(c[i] x^i), lowest degree first."""

        return [-c for c in self.coefficients] + [1]

    def terms(self, count: int) -> List[int]:
        """Return the first *count* terms."""

        if count <= 0:
            return []
        values = list(self.initials[:count])
        window = list(self.initials)
        while len(values) < count:
            following = sum(c * v for c, v in zip(self.coefficients, window))
            values.append(following)
            window = window[1:] + [following]
        return values

    # --- Closure operations ---------------------------------------------
    def __add__(self, other: "CFiniteSpec") -> "CFiniteSpec":
        if not isinstance(other, CFiniteSpec):
            return NotImplemented
        if self.coefficients == other.coefficients:
            return CFiniteSpec(
                self.coefficients,
                tuple(a + b for a, b in zip(self.initials, other.initials)),
            )
        polynomial = _poly_mul(self.characteristic_polynomial(), other.characteristic_polynomial())
        order = len(polynomial) - 1
        initials = [a + b for a, b in zip(self.terms(order), other.terms(order))]
        return CFiniteSpec.from_characteristic(polynomial, initials)

    def __neg__(self) -> "CFiniteSpec":
        return self.scale(-1)

    def __sub__(self, other: "CFiniteSpec") -> "CFiniteSpec":
        if not isinstance(other, CFiniteSpec):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: int) -> "CFiniteSpec":
        """n -> factor * a(n)."""

        return CFiniteSpec(self.coefficients, tuple(factor * v for v in self.initials))

    def shift(self, offset: int = 1) -> "CFiniteSpec":
        """n -> a(n + offset), offset >= 0."""

        if offset < 0:
            raise ValueError("shift offset must be non-negative")
        return CFiniteSpec(self.coefficients, tuple(self.terms(offset + self.order)[offset:]))

    def geometric(self, ratio: int) -> "CFiniteSpec":
        """n -> ratio**n * a(n)."""

        if ratio == 0:
            raise ValueError("geometric ratio must be nonzero")
        order = self.order
        coefficients = tuple(c * ratio ** (order - i) for i, c in enumerate(self.coefficients))
        initials = tuple(ratio**i * v for i, v in enumerate(self.initials))
        return CFiniteSpec(coefficients, initials)

    def geometric_convolution(self, ratio: int = 1) -> "CFiniteSpec":
        """n -> sum_{k<=n} ratio**(n-k) * a(k); ratio 1 gives partial sums."""

        polynomial = _poly_mul([-ratio, 1], self.characteristic_polynomial())
        order = len(polynomial) - 1
        initials: List[int] = []
        running = 0
        for value in self.terms(order):
            running = ratio * running + value
            initials.append(running)
        return CFiniteSpec.from_characteristic(polynomial, initials)

    def partial_sums(self) -> "CFiniteSpec":
        return self.geometric_convolution(1)


def cfinite_eval(spec: CFiniteSpec, n: int) -> int:
    """Return the n-th term of *spec* by iterating the recurrence."""

    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if n < spec.order:
        return spec.initials[n]
    window = list(spec.initials)
    for _ in range(n - spec.order + 1):
        following = sum(c * v for c, v in zip(spec.coefficients, window))
        window = window[1:] + [following]
    return window[-1]


def cfinite_eval_matrix(spec: CFiniteSpec, n: int) -> int:
    """Return the n-th term of *spec* through a power of its companion matrix."""

    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    order = spec.order
    if n < order:
        return spec.initials[n]
    # Row i maps window[i] -> window[i+1]; the last row applies the recurrence.
    companion = [[1 if col == row + 1 else 0 for col in range(order)] for row in range(order - 1)]
    companion.append(list(spec.coefficients))
    power = _matrix_power(companion, n)
    return sum(power[0][j] * spec.initials[j] for j in range(order))


def _poly_mul(left: Sequence[int], right: Sequence[int]) -> List[int]:
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if not a:
            continue
        for j, b in enumerate(right):
            product[i + j] += a * b
    return product


def _matrix_mul(left: List[List[int]], right: List[List[int]]) -> List[List[int]]:
    size = len(left)
    return [
        [sum(left[i][k] * right[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _matrix_power(matrix: List[List[int]], exponent: int) -> List[List[int]]:
    size = len(matrix)
    result = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    base = matrix
    while exponent:
        if exponent & 1:
            result = _matrix_mul(result, base)
        base = _matrix_mul(base, base)
        exponent >>= 1
    return result


__all__ = ["CFiniteSpec", "cfinite_eval", "cfinite_eval_matrix"]
