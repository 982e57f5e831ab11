"""Identity identifiers, verification reports and C-finite certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple


class IdentityId(str, Enum):
    SURY = "sury"
    THEOREM2 = "theorem2"
    GENERAL = "general"
    ALTERNATING = "alternating"
    COROLLARY = "corollary"


class Method(str, Enum):
    DIRECT = "direct"
    TILINGS = "tilings"
    GENFUN = "genfun"
    CERTIFICATE = "certificate"
    TELESCOPING = "telescoping"


@dataclass(frozen=True)
class IdentityRow:
    n: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "lhs": str(self.lhs), "rhs": str(self.rhs), "holds": self.holds}


@dataclass
class IdentityReport:
    """Per-n values of both sides of an identity, computed by one method."""

    identity: IdentityId
    method: Method
    m: int
    n_max: int
    rows: List[IdentityRow] = field(default_factory=list)
    failed_checks: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_range(self) -> Tuple[int, int]:
        return (0, self.n_max)

    @property
    def failures(self) -> List[int]:
        """Indices n where the two sides differ."""

        return [row.n for row in self.rows if not row.holds]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.failed_checks

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity.value,
            "method": self.method.value,
            "m": self.m,
            "n_range": list(self.n_range),
            "verdict": self.verdict,
            "failures": list(self.failures),
            "failed_checks": list(self.failed_checks),
            "rows": [row.to_dict() for row in self.rows],
            "details": dict(self.details),
        }


@dataclass(frozen=True)
class Certificate:
    """Proof that LHS(n) - RHS(n) vanishes for all n.

    The difference satisfies a recurrence of order ``closure_order``; it is
    checked to be zero on n = 0..``bound`` with bound >= closure_order.
    """

    identity: IdentityId
    m: int
    static_bound: int
    closure_order: int
    characteristic_polynomial: Tuple[int, ...]
    differences: Tuple[int, ...]

    @property
    def bound(self) -> int:
        return max(self.static_bound, self.closure_order)

    @property
    def verified_range(self) -> Tuple[int, int]:
        return (0, len(self.differences) - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity.value,
            "m": self.m,
            "static_bound": self.static_bound,
            "closure_order": self.closure_order,
            "bound": self.bound,
            "characteristic_polynomial": [str(c) for c in self.characteristic_polynomial],
            "verified_range": list(self.verified_range),
            "differences": [str(d) for d in self.differences],
        }


__all__ = ["IdentityId", "Method", "IdentityRow", "IdentityReport", "Certificate"]
