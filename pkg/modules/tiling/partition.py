"""Classification of board and bracelet tilings into the classes used by the 1-to-2 correspondence."""

from __future__ import annotations

import logging
from typing import Dict, List

from modules.core.services.errors import InvalidTilingError

from .enumeration import enumerate_board, enumerate_bracelet
from .models import (
    BOARD_CLASSES,
    BoardTiling,
    BraceletTiling,
    ColorScheme,
    Phase,
    TilingPartition,
    as_scheme,
    bracelet_class_labels,
)

logger = logging.getLogger(__name__)


def classify_board(tiling: BoardTiling) -> str:
    """``s``/``d`` by the last tile that is not a white square, ``w`` if there is none."""

    found = tiling.last_nonwhite()
    if found is None:
        return "w"
    _, _, tile = found
    return "s" if tile.is_square else "d"


def classify_bracelet(tiling: BraceletTiling) -> str:
    """``c<i>``, ``p`` or ``o`` by the tile covering cell n."""

    if tiling.is_formal:
        raise InvalidTilingError("0-bracelets carry no tile on cell n and belong to no class")
    if tiling.phase is Phase.OUT:
        return "o"
    last = tiling.last_tile()
    return f"c{last.color}" if last.is_square else "p"


def partition_board(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> TilingPartition:
    active = as_scheme(scheme)
    classes: Dict[str, List[BoardTiling]] = {label: [] for label in BOARD_CLASSES}
    for tiling in enumerate_board(n, active, cap=cap):
        classes[classify_board(tiling)].append(tiling)
    partition = TilingPartition(
        "board", n, active.m, {label: tuple(members) for label, members in classes.items()}
    )
    logger.debug("Board partition n=%d m=%d: %s", n, active.m, partition.sizes())
    return partition


def partition_bracelet(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> TilingPartition:
    if n < 1:
        raise InvalidTilingError("bracelet classes are defined for n >= 1; 0-bracelets are a formal convention")
    active = as_scheme(scheme)
    classes: Dict[str, List[BraceletTiling]] = {label: [] for label in bracelet_class_labels(active.m)}
    for tiling in enumerate_bracelet(n, active, cap=cap):
        classes[classify_bracelet(tiling)].append(tiling)
    partition = TilingPartition(
        "bracelet", n, active.m, {label: tuple(members) for label, members in classes.items()}
    )
    logger.debug("Bracelet partition n=%d m=%d: %s", n, active.m, partition.sizes())
    return partition


__all__ = ["classify_board", "classify_bracelet", "partition_board", "partition_bracelet"]
