"""Counting and exhaustive enumeration of (n, m)-tilings.

Counting goes through closed formulas (m^n F_{n+1} for boards, m^n L_n for
bracelets) and never enumerates. Enumeration is depth-first with dominoes tried
before squares and colors ascending, which yields the lexicographic order of
canonical encodings.
"""

from __future__ import annotations

import logging
from typing import Iterator, List, Tuple

from modules.core.services.errors import SizeLimitError
from modules.core.services.settings import resolve_cap
from modules.sequences import fib, lucas

from .models import BoardTiling, BraceletTiling, ColorScheme, Phase, Tile, as_scheme

logger = logging.getLogger(__name__)


def _check_length(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"length must be a non-negative integer, got {n!r}")


def count_board(n: int, scheme: ColorScheme | int) -> int:
    """Number of (n, m)-board tilings, m^n F_{n+1}."""

    _check_length(n)
    m = as_scheme(scheme).m
    return m**n * fib(n + 1)


def count_bracelet(n: int, scheme: ColorScheme | int) -> int:
    """Number of (n, m)-bracelet tilings, m^n L_n (two formal tilings when n = 0)."""

    _check_length(n)
    m = as_scheme(scheme).m
    return m**n * lucas(n)


def _guard(what: str, count: int, cap: int | None) -> None:
    limit = resolve_cap(cap)
    if count > limit:
        logger.warning("Refusing to enumerate %s: %d objects exceed cap %d", what, count, limit)
        raise SizeLimitError(what, count, limit)
    logger.debug("Enumerating %s: %d objects (cap %d)", what, count, limit)


def _board_tile_sequences(n: int, scheme: ColorScheme) -> Iterator[Tuple[Tile, ...]]:
    dominoes = [Tile.domino(color) for color in scheme.domino_colors]
    squares = [Tile.square(color) for color in scheme.square_colors]

    def _walk(remaining: int) -> Iterator[Tuple[Tile, ...]]:
        if remaining == 0:
            yield ()
            return
        if remaining >= 2:
            for tile in dominoes:
                for rest in _walk(remaining - 2):
                    yield (tile,) + rest
        for tile in squares:
            for rest in _walk(remaining - 1):
                yield (tile,) + rest

    return _walk(n)


def iter_board(n: int, scheme: ColorScheme | int) -> Iterator[BoardTiling]:
    """Lazily yield every (n, m)-board tiling in canonical order, without a cap."""

    _check_length(n)
    active = as_scheme(scheme)
    for tiles in _board_tile_sequences(n, active):
        yield BoardTiling(active.m, n, tiles)


def iter_bracelet(n: int, scheme: ColorScheme | int) -> Iterator[BraceletTiling]:
    """Lazily yield every (n, m)-bracelet tiling, in-phase ones first."""

    _check_length(n)
    active = as_scheme(scheme)
    if n == 0:
        yield BraceletTiling(active.m, 0, Phase.IN, ())
        yield BraceletTiling(active.m, 0, Phase.OUT, ())
        return
    for tiles in _board_tile_sequences(n, active):
        yield BraceletTiling(active.m, n, Phase.IN, tiles)
    if n < 2:
        return
    for color in active.domino_colors:
        straddle = Tile.domino(color)
        for tiles in _board_tile_sequences(n - 2, active):
            yield BraceletTiling(active.m, n, Phase.OUT, (straddle,) + tiles)


def enumerate_board(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> List[BoardTiling]:
    """All (n, m)-board tilings; raises SizeLimitError above the enumeration cap."""

    active = as_scheme(scheme)
    _guard(f"({n},{active.m})-board tilings", count_board(n, active), cap)
    return list(iter_board(n, active))


def enumerate_bracelet(n: int, scheme: ColorScheme | int, *, cap: int | None = None) -> List[BraceletTiling]:
    """All (n, m)-bracelet tilings; raises SizeLimitError above the enumeration cap."""

    active = as_scheme(scheme)
    _guard(f"({n},{active.m})-bracelet tilings", count_bracelet(n, active), cap)
    return list(iter_bracelet(n, active))


__all__ = [
    "count_board",
    "count_bracelet",
    "iter_board",
    "iter_bracelet",
    "enumerate_board",
    "enumerate_bracelet",
]
