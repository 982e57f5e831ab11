"""Fold/unfold maps between board and bracelet tilings.

Folding a board keeps the tiles up to its last non-white tile (ending at cell k)
and glues cell k to cell 1. Variant 1 keeps every tile as is and always yields an
in-phase k-bracelet. Variant 2 recolors a terminal gray square (color 2) to white
and re-glues a terminal domino across cells k and 1, yielding an out-of-phase
bracelet. Together with the two formal 0-bracelets and m - 2 copies of the
(k-1)-boards, the two variants account for twice the number of n-boards.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, FrozenSet, Optional, Tuple

from modules.core.services.errors import InvalidTilingError
from modules.tiling import (
    WHITE,
    BoardTiling,
    BraceletTiling,
    ColorScheme,
    Phase,
    Tile,
    as_scheme,
    bracelet_class_labels,
    classify_board,
    classify_bracelet,
    count_board,
    enumerate_board,
    enumerate_bracelet,
    iter_board,
    partition_bracelet,
    tiling_to_record,
)

from .models import CorrespondenceReport, FoldResult, LengthTally, UnfoldReport, Witness

logger = logging.getLogger(__name__)

GRAY = 2


def unfold_bracelet_tagged(bracelet: BraceletTiling) -> Tuple[Optional[int], BoardTiling]:
    """Unfold a bracelet, also returning the straddling domino color (None when in phase)."""

    if bracelet.length < 1:
        raise InvalidTilingError("0-bracelets cannot be unfolded")
    if bracelet.phase is Phase.IN:
        return None, BoardTiling(bracelet.m, bracelet.length, bracelet.tiles)
    straddle, rest = bracelet.tiles[0], bracelet.tiles[1:]
    return straddle.color, BoardTiling(bracelet.m, bracelet.length - 2, rest)


def unfold_bracelet(bracelet: BraceletTiling) -> BoardTiling:
    """In-phase bracelets unfold to n-boards; out-of-phase ones straighten to (n-2)-boards."""

    return unfold_bracelet_tagged(bracelet)[1]


def _variant2_square_color(color: int) -> int:
    return WHITE if color == GRAY else color


def fold_board(tiling: BoardTiling, variant: int, scheme: ColorScheme | int | None = None) -> FoldResult:
    """Cut a board after its last non-white tile and glue the ends into a bracelet."""

    if variant not in (1, 2):
        raise InvalidTilingError(f"fold variant must be 1 or 2, got {variant}")
    if scheme is not None and as_scheme(scheme).m != tiling.m:
        raise InvalidTilingError(f"board uses m = {tiling.m} but the scheme has m = {as_scheme(scheme).m}")
    found = tiling.last_nonwhite()
    if found is None:
        raise InvalidTilingError("all-white boards map to the formal 0-bracelets, not through fold_board")
    index, position, tile = found
    kept = tiling.tiles[: index + 1]
    if variant == 1:
        bracelet = BraceletTiling(tiling.m, position, Phase.IN, kept)
    elif tile.is_square:
        recolored = kept[:-1] + (Tile.square(_variant2_square_color(tile.color)),)
        bracelet = BraceletTiling(tiling.m, position, Phase.IN, recolored)
    else:
        bracelet = BraceletTiling(tiling.m, position, Phase.OUT, (tile,) + kept[:-1])
    return FoldResult(bracelet=bracelet, source_position=position, variant=variant)


def cut_and_pad(bracelet: BraceletTiling, n: int) -> BoardTiling:
    """Inverse of variant-1 folding: pad an in-phase k-bracelet with white squares up to length n."""

    if bracelet.phase is not Phase.IN or bracelet.length < 1:
        raise InvalidTilingError("only in-phase bracelets of length >= 1 are variant-1 fold images")
    if bracelet.length > n:
        raise InvalidTilingError(f"cannot pad a {bracelet.length}-bracelet to a shorter {n}-board")
    padding = tuple(Tile.square(WHITE) for _ in range(n - bracelet.length))
    return BoardTiling(bracelet.m, n, bracelet.tiles + padding)


def unfold_square_terminated(bracelet: BraceletTiling) -> BoardTiling:
    """Drop the square covering cell k of an in-phase k-bracelet, leaving a (k-1)-board."""

    if bracelet.length < 1 or bracelet.phase is not Phase.IN or not bracelet.tiles[-1].is_square:
        raise InvalidTilingError("expected an in-phase bracelet ending with a square")
    return BoardTiling(bracelet.m, bracelet.length - 1, bracelet.tiles[:-1])


def variant_targets(m: int) -> Dict[int, FrozenSet[str]]:
    """Bracelet classes each fold variant maps onto."""

    upper = {f"c{i}" for i in range(3, m + 1)}
    return {
        1: frozenset({"c2", "p"} | upper),
        2: frozenset({"c1", "o"} | upper),
    }


def doubled_classes(m: int) -> FrozenSet[str]:
    """Classes reached by both variants: squares of colors 3..m."""

    targets = variant_targets(m)
    return targets[1] & targets[2]


def verify_unfold(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> UnfoldReport:
    """Check that unfolding is a bijection onto n-boards plus (domino color, (n-2)-board) pairs."""

    active = as_scheme(scheme)
    if n < 1:
        raise ValueError(f"unfolding needs n >= 1, got {n}")
    bracelets = enumerate_bracelet(n, active, cap=cap)
    boards = {tiling.canonical_key() for tiling in enumerate_board(n, active, cap=cap)}
    shorter = {tiling.canonical_key() for tiling in iter_board(n - 2, active)} if n >= 2 else set()
    expected_straightened = {(color, key) for color in active.domino_colors for key in shorter}

    report = UnfoldReport(n=n, m=active.m, in_phase=0, out_of_phase=0, board_images=0, straightened_images=0)
    board_images: Dict[object, BraceletTiling] = {}
    straightened: Dict[object, BraceletTiling] = {}
    injective = True
    for bracelet in bracelets:
        color, board = unfold_bracelet_tagged(bracelet)
        if color is None:
            report.in_phase += 1
            target, key = board_images, board.canonical_key()
        else:
            report.out_of_phase += 1
            target, key = straightened, (color, board.canonical_key())
        if key in target and injective:
            injective = False
            report.witness = Witness("injective", "two bracelets unfold to the same board", tiling_to_record(bracelet))
        target[key] = bracelet

    report.board_images = len(board_images)
    report.straightened_images = len(straightened)
    report.checks = {
        "injective": injective,
        "onto_boards": set(board_images) == boards,
        "onto_straightened": set(straightened) == expected_straightened,
        "count": len(bracelets) == len(boards) + len(expected_straightened),
    }
    if not report.passed and report.witness is None:
        failed = next(name for name, ok in report.checks.items() if not ok)
        report.witness = Witness(failed, "unfold images differ from the expected board sets")
    logger.info("Unfold check n=%d m=%d: %s", n, active.m, "pass" if report.passed else "fail")
    return report


def verify_correspondence(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> CorrespondenceReport:
    """Fold every non-white n-board both ways and tally the images against bracelets of length <= n."""

    active = as_scheme(scheme)
    m = active.m
    if n < 1:
        raise ValueError(f"the fold correspondence needs n >= 1, got {n}")
    if m < 2:
        raise ValueError(f"the fold correspondence needs m >= 2 square colors, got {m}")

    boards = enumerate_board(n, active, cap=cap)
    targets = variant_targets(m)
    doubled = doubled_classes(m)
    report = CorrespondenceReport(
        n=n,
        m=m,
        board_count=len(boards),
        board_classes={"s": 0, "d": 0, "w": 0},
        target=2 * len(boards),
    )

    def _fail(check: str, message: str, tiling=None) -> None:
        report.checks[check] = False
        if report.witness is None:
            record = tiling_to_record(tiling) if tiling is not None else None
            report.witness = Witness(check, message, record)
            logger.warning("Correspondence check %s failed for n=%d m=%d: %s", check, n, m, message)

    for check in ("injective_v1", "injective_v2", "targets_v1", "targets_v2", "round_trip"):
        report.checks[check] = True

    seen: Dict[int, set] = {1: set(), 2: set()}
    images: Dict[int, Dict[int, Counter]] = {1: {}, 2: {}}
    for board in boards:
        label = classify_board(board)
        report.board_classes[label] += 1
        if label == "w":
            continue
        for variant in (1, 2):
            folded = fold_board(board, variant, active)
            bracelet = folded.bracelet
            key = (bracelet.length, bracelet.canonical_key())
            if key in seen[variant]:
                _fail(f"injective_v{variant}", f"variant {variant} maps two boards to one bracelet", board)
            seen[variant].add(key)
            klass = classify_bracelet(bracelet)
            if klass not in targets[variant]:
                _fail(f"targets_v{variant}", f"variant {variant} image lands in class {klass}", board)
            images[variant].setdefault(folded.source_position, Counter())[klass] += 1
            if variant == 1 and cut_and_pad(bracelet, n) != board:
                _fail("round_trip", "cut-and-pad does not restore the board", board)

    report.checks["onto_v1"] = True
    report.checks["onto_v2"] = True
    report.checks["extra_unfold"] = True
    cumulative = Counter({label: 0 for label in bracelet_class_labels(m)})
    for k in range(1, n + 1):
        partition = partition_bracelet(k, active, cap=cap)
        sizes = partition.sizes()
        for variant in (1, 2):
            landed = images[variant].get(k, Counter())
            for label in targets[variant]:
                if landed[label] != sizes[label]:
                    _fail(
                        f"onto_v{variant}",
                        f"variant {variant} hits {landed[label]} of {sizes[label]} bracelets in class {label} at k={k}",
                    )
        extra = 0
        shorter = {board.canonical_key() for board in iter_board(k - 1, active)}
        for label in sorted(doubled):
            members = partition.members(label)
            unfolded = {unfold_square_terminated(bracelet).canonical_key() for bracelet in members}
            if unfolded != shorter or len(unfolded) != len(members):
                _fail("extra_unfold", f"class {label} at k={k} does not unfold onto the {k - 1}-boards")
            extra += len(members)
        report.per_length.append(
            LengthTally(
                k=k,
                classes=sizes,
                variant1={label: images[1].get(k, Counter())[label] for label in sorted(targets[1])},
                variant2={label: images[2].get(k, Counter())[label] for label in sorted(targets[2])},
                extra_boards=extra,
            )
        )
        cumulative.update(sizes)
        report.extra_boards += extra

    report.cumulative = dict(cumulative)
    report.total = sum(cumulative.values()) + report.zero_bracelets + report.extra_boards
    report.checks["extra_formula"] = report.extra_boards == (m - 2) * sum(count_board(k, m) for k in range(n))
    images_total = len(seen[1]) + len(seen[2]) + report.zero_bracelets
    report.checks["images_total"] = images_total == report.target
    report.checks["bookkeeping"] = report.total == report.target
    if not report.passed and report.witness is None:
        failed = next((name for name, ok in report.checks.items() if not ok), "bookkeeping")
        report.witness = Witness(failed, f"tally {report.total} against 2|A| = {report.target}")
    logger.info("Correspondence n=%d m=%d: %s", n, m, "pass" if report.passed else "fail")
    return report


__all__ = [
    "unfold_bracelet",
    "unfold_bracelet_tagged",
    "fold_board",
    "cut_and_pad",
    "unfold_square_terminated",
    "variant_targets",
    "doubled_classes",
    "verify_unfold",
    "verify_correspondence",
]
