"""Dataclasses for colored square/domino tilings of boards and bracelets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from modules.core.services.errors import InvalidTilingError

WHITE = 1


class TileKind(str, Enum):
    SQUARE = "s"
    DOMINO = "d"


class Phase(str, Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class ColorScheme:
    """Squares come in ``m`` colors and dominoes in ``m**2`` colors; color 1 is white."""

    m: int

    def __post_init__(self) -> None:
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise InvalidTilingError(f"number of square colors must be an integer >= 1, got {self.m!r}")

    @property
    def white(self) -> int:
        return WHITE

    @property
    def square_colors(self) -> range:
        return range(1, self.m + 1)

    @property
    def domino_colors(self) -> range:
        return range(1, self.m * self.m + 1)

    def color_limit(self, kind: TileKind) -> int:
        return self.m if kind is TileKind.SQUARE else self.m * self.m

    def validate(self, tile: "Tile") -> None:
        limit = self.color_limit(tile.kind)
        if not 1 <= tile.color <= limit:
            noun = "square" if tile.kind is TileKind.SQUARE else "domino"
            raise InvalidTilingError(f"{noun} color {tile.color} outside 1..{limit} for m = {self.m}")


@dataclass(frozen=True)
class Tile:
    kind: TileKind
    color: int

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "kind", TileKind(self.kind))
        except ValueError:
            raise InvalidTilingError(f"unknown tile kind {self.kind!r}") from None
        if isinstance(self.color, bool) or not isinstance(self.color, int) or self.color < 1:
            raise InvalidTilingError(f"tile color must be a positive integer, got {self.color!r}")

    @classmethod
    def square(cls, color: int) -> "Tile":
        return cls(TileKind.SQUARE, color)

    @classmethod
    def domino(cls, color: int) -> "Tile":
        return cls(TileKind.DOMINO, color)

    @property
    def span(self) -> int:
        return 1 if self.kind is TileKind.SQUARE else 2

    @property
    def is_square(self) -> bool:
        return self.kind is TileKind.SQUARE

    @property
    def is_white_square(self) -> bool:
        return self.kind is TileKind.SQUARE and self.color == WHITE

    def key(self) -> Tuple[str, int]:
        return (self.kind.value, self.color)


def _check_tiles(length: int, tiles: Sequence[Tile], m: int) -> ColorScheme:
    if isinstance(length, bool) or not isinstance(length, int) or length < 0:
        raise InvalidTilingError(f"length must be a non-negative integer, got {length!r}")
    scheme = ColorScheme(m)
    for tile in tiles:
        if not isinstance(tile, Tile):
            raise InvalidTilingError(f"expected Tile, got {type(tile).__name__}")
        scheme.validate(tile)
    covered = sum(tile.span for tile in tiles)
    if covered != length:
        raise InvalidTilingError(f"tiles cover {covered} cells but the length is {length}")
    return scheme


@dataclass(frozen=True)
class BoardTiling:
    """Tiling of cells 1..length of a linear board, tiles listed left to right."""

    m: int
    length: int
    tiles: Tuple[Tile, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        _check_tiles(self.length, self.tiles, self.m)

    @property
    def scheme(self) -> ColorScheme:
        return ColorScheme(self.m)

    @property
    def is_all_white(self) -> bool:
        return all(tile.is_white_square for tile in self.tiles)

    def cells(self) -> List[Tuple[int, Tile]]:
        """Pairs of (last cell covered, tile) in board order."""

        result: List[Tuple[int, Tile]] = []
        position = 0
        for tile in self.tiles:
            position += tile.span
            result.append((position, tile))
        return result

    def last_nonwhite(self) -> Optional[Tuple[int, int, Tile]]:
        """(tile index, last cell covered, tile) of the last tile that is not a white square."""

        for index, (position, tile) in reversed(list(enumerate(self.cells()))):
            if not tile.is_white_square:
                return index, position, tile
        return None

    def last_nonwhite_position(self) -> Optional[int]:
        found = self.last_nonwhite()
        return found[1] if found else None

    def canonical_key(self) -> Tuple[Tuple[str, int], ...]:
        return tuple(tile.key() for tile in self.tiles)


@dataclass(frozen=True)
class BraceletTiling:
    """Tiling of a circular board; out-of-phase tilings list the domino on (n, 1) first."""

    m: int
    length: int
    phase: Phase
    tiles: Tuple[Tile, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        object.__setattr__(self, "phase", Phase(self.phase))
        _check_tiles(self.length, self.tiles, self.m)
        if self.phase is Phase.OUT and self.length > 0:
            if self.tiles[0].kind is not TileKind.DOMINO:
                raise InvalidTilingError("an out-of-phase bracelet must start with the domino covering cells n and 1")

    @property
    def scheme(self) -> ColorScheme:
        return ColorScheme(self.m)

    @property
    def is_formal(self) -> bool:
        """True for the two tile-free 0-bracelets."""

        return self.length == 0

    def last_tile(self) -> Tile:
        """Tile covering cell n (the straddling domino for out-of-phase tilings)."""

        if not self.tiles:
            raise InvalidTilingError("a 0-bracelet has no tile covering cell n")
        return self.tiles[0] if self.phase is Phase.OUT else self.tiles[-1]

    def canonical_key(self) -> Tuple[str, Tuple[Tuple[str, int], ...]]:
        return (self.phase.value, tuple(tile.key() for tile in self.tiles))


def as_scheme(scheme: ColorScheme | int) -> ColorScheme:
    return scheme if isinstance(scheme, ColorScheme) else ColorScheme(scheme)


def all_white_board(length: int, m: int) -> BoardTiling:
    """The board t_{n,w} made entirely of white squares."""

    return BoardTiling(m, length, tuple(Tile.square(WHITE) for _ in range(length)))


BOARD_CLASSES = ("s", "d", "w")
BRACELET_FIXED_CLASSES = ("p", "o")


def bracelet_class_labels(m: int) -> Tuple[str, ...]:
    return tuple(f"c{i}" for i in range(1, m + 1)) + BRACELET_FIXED_CLASSES


@dataclass(frozen=True)
class TilingPartition:
    """Disjoint classes of a full tiling set.

    Boards use labels ``s`` (last non-white tile is a square), ``d`` (it is a
    domino) and ``w`` (the all-white tiling). Bracelets use ``c1``..``cm`` (cell n
    under a square of that color), ``p`` (in-phase domino) and ``o`` (out of phase).
    """

    kind: str
    length: int
    m: int
    classes: Mapping[str, Tuple[object, ...]]

    def sizes(self) -> Dict[str, int]:
        return {label: len(members) for label, members in self.classes.items()}

    def total(self) -> int:
        return sum(self.sizes().values())

    def members(self, label: str) -> Tuple[object, ...]:
        return tuple(self.classes.get(label, ()))

    def is_balanced(self) -> bool:
        """Equal square-color classes and |p| = |o| (bracelets only)."""

        if self.kind != "bracelet":
            return True
        sizes = self.sizes()
        color_sizes = {sizes[f"c{i}"] for i in range(1, self.m + 1)}
        if len(color_sizes) > 1:
            return False
        return self.length < 2 or sizes["p"] == sizes["o"]


__all__ = [
    "WHITE",
    "TileKind",
    "Phase",
    "ColorScheme",
    "Tile",
    "BoardTiling",
    "BraceletTiling",
    "TilingPartition",
    "all_white_board",
    "as_scheme",
    "bracelet_class_labels",
    "BOARD_CLASSES",
]
