"""JSON records and ASCII rendering for tilings.

Record layout::

    {"kind": "board"|"bracelet", "length": n, "m": m, "phase": "in"|"out", "tiles": [{"t": "s"|"d", "c": int}, ...]}

``phase`` is present for bracelets only. Records are dumped compactly with a fixed
key order, so encode -> parse -> encode reproduces the same bytes.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Mapping, Union

from modules.core.services.errors import InvalidTilingError

from .models import BoardTiling, BraceletTiling, Phase, Tile, TileKind

Tiling = Union[BoardTiling, BraceletTiling]


def tiling_to_record(tiling: Tiling) -> Dict[str, Any]:
    record: Dict[str, Any] = {
        "kind": "bracelet" if isinstance(tiling, BraceletTiling) else "board",
        "length": tiling.length,
        "m": tiling.m,
    }
    if isinstance(tiling, BraceletTiling):
        record["phase"] = tiling.phase.value
    record["tiles"] = [{"t": tile.kind.value, "c": tile.color} for tile in tiling.tiles]
    return record


def _int_field(record: Mapping[str, Any], key: str) -> int:
    value = record.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidTilingError(f"tiling record field {key!r} must be an integer, got {value!r}")
    return value


def tiling_from_record(record: Mapping[str, Any]) -> Tiling:
    if not isinstance(record, Mapping):
        raise InvalidTilingError("tiling record must be a JSON object")
    kind = record.get("kind")
    length = _int_field(record, "length")
    m = _int_field(record, "m")
    raw_tiles = record.get("tiles")
    if not isinstance(raw_tiles, list):
        raise InvalidTilingError("tiling record field 'tiles' must be a list")
    tiles = []
    for entry in raw_tiles:
        if not isinstance(entry, Mapping) or set(entry) != {"t", "c"}:
            raise InvalidTilingError(f"tile entries need exactly the keys 't' and 'c', got {entry!r}")
        tiles.append(Tile(entry["t"], _int_field(entry, "c")))
    if kind == "board":
        if "phase" in record:
            raise InvalidTilingError("board records carry no phase")
        return BoardTiling(m, length, tuple(tiles))
    if kind == "bracelet":
        phase = record.get("phase")
        if phase not in (Phase.IN.value, Phase.OUT.value):
            raise InvalidTilingError(f"bracelet phase must be 'in' or 'out', got {phase!r}")
        return BraceletTiling(m, length, Phase(phase), tuple(tiles))
    raise InvalidTilingError(f"tiling record kind must be 'board' or 'bracelet', got {kind!r}")


def dumps_record(tiling: Tiling) -> str:
    return json.dumps(tiling_to_record(tiling), separators=(",", ":"))


def dumps_records(tilings: Iterable[Tiling]) -> str:
    """One compact record per line."""

    return "\n".join(dumps_record(tiling) for tiling in tilings)


def loads_records(text: str) -> List[Tiling]:
    tilings: List[Tiling] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InvalidTilingError(f"line {number}: invalid JSON ({exc.msg})") from exc
        tilings.append(tiling_from_record(payload))
    return tilings


def render_ascii(tiling: Tiling) -> str:
    """Squares as ``[c]``, dominoes as ``[==c]``, out-of-phase bracelets prefixed with ``~``."""

    body = "".join(
        f"[{tile.color}]" if tile.kind is TileKind.SQUARE else f"[=={tile.color}]"
        for tile in tiling.tiles
    ) or "()"
    if isinstance(tiling, BraceletTiling) and tiling.phase is Phase.OUT:
        return "~" + body
    return body


__all__ = [
    "tiling_to_record",
    "tiling_from_record",
    "dumps_record",
    "dumps_records",
    "loads_records",
    "render_ascii",
]
