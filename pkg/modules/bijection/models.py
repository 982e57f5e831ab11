"""Result containers for fold/unfold maps and correspondence checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from modules.core.services.errors import InvalidTilingError
from modules.tiling import BraceletTiling


@dataclass(frozen=True)
class FoldResult:
    """A k-bracelet produced from a board whose last non-white tile ends at cell k."""

    bracelet: BraceletTiling
    source_position: int
    variant: int

    def __post_init__(self) -> None:
        if self.source_position < 1:
            raise InvalidTilingError("fold position must be >= 1")
        if self.bracelet.length != self.source_position:
            raise InvalidTilingError("folded bracelet length must equal the fold position")
        if self.variant not in (1, 2):
            raise InvalidTilingError(f"fold variant must be 1 or 2, got {self.variant}")


@dataclass
class Witness:
    """Concrete tiling (as a JSON record) that made a check fail."""

    check: str
    message: str
    record: Dict[str, Any] | None = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"check": self.check, "message": self.message}
        if self.record is not None:
            payload["tiling"] = self.record
        return payload


@dataclass
class LengthTally:
    """Per bracelet length k: class sizes, fold images landing there, and extra boards."""

    k: int
    classes: Dict[str, int]
    variant1: Dict[str, int]
    variant2: Dict[str, int]
    extra_boards: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "classes": dict(self.classes),
            "variant1": dict(self.variant1),
            "variant2": dict(self.variant2),
            "extra_boards": self.extra_boards,
        }


@dataclass
class CorrespondenceReport:
    n: int
    m: int
    board_count: int
    board_classes: Dict[str, int]
    per_length: List[LengthTally] = field(default_factory=list)
    cumulative: Dict[str, int] = field(default_factory=dict)
    zero_bracelets: int = 2
    extra_boards: int = 0
    total: int = 0
    target: int = 0
    checks: Dict[str, bool] = field(default_factory=dict)
    witness: Optional[Witness] = None

    @property
    def single_zero_tally(self) -> int:
        """The tally counting the two formal 0-bracelets as one; it falls short of 2|A| by one."""

        return self.total - self.zero_bracelets + 1

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and self.total == self.target

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "board_count": self.board_count,
            "board_classes": dict(self.board_classes),
            "per_length": [entry.to_dict() for entry in self.per_length],
            "cumulative": dict(self.cumulative),
            "zero_bracelets": self.zero_bracelets,
            "extra_boards": self.extra_boards,
            "total": self.total,
            "target": self.target,
            "single_zero_tally": self.single_zero_tally,
            "checks": dict(self.checks),
            "verdict": "pass" if self.passed else "fail",
        }
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


@dataclass
class UnfoldReport:
    n: int
    m: int
    in_phase: int
    out_of_phase: int
    board_images: int
    straightened_images: int
    checks: Dict[str, bool] = field(default_factory=dict)
    witness: Optional[Witness] = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "in_phase": self.in_phase,
            "out_of_phase": self.out_of_phase,
            "board_images": self.board_images,
            "straightened_images": self.straightened_images,
            "checks": dict(self.checks),
            "verdict": "pass" if self.passed else "fail",
        }
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


__all__ = ["FoldResult", "Witness", "LengthTally", "CorrespondenceReport", "UnfoldReport"]
