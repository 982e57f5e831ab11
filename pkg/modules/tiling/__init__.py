"""Colored square/domino tilings of n-boards and n-bracelets."""

from .codec import dumps_record, dumps_records, loads_records, render_ascii, tiling_from_record, tiling_to_record
from .enumeration import count_board, count_bracelet, enumerate_board, enumerate_bracelet, iter_board, iter_bracelet
from .models import (
    WHITE,
    BoardTiling,
    BraceletTiling,
    ColorScheme,
    Phase,
    Tile,
    TileKind,
    TilingPartition,
    all_white_board,
    as_scheme,
    bracelet_class_labels,
)
from .partition import classify_board, classify_bracelet, partition_board, partition_bracelet

__all__ = [
    "WHITE",
    "BoardTiling",
    "BraceletTiling",
    "ColorScheme",
    "Phase",
    "Tile",
    "TileKind",
    "TilingPartition",
    "all_white_board",
    "as_scheme",
    "bracelet_class_labels",
    "count_board",
    "count_bracelet",
    "enumerate_board",
    "enumerate_bracelet",
    "iter_board",
    "iter_bracelet",
    "classify_board",
    "classify_bracelet",
    "partition_board",
    "partition_bracelet",
    "tiling_to_record",
    "tiling_from_record",
    "dumps_record",
    "dumps_records",
    "loads_records",
    "render_ascii",
]
