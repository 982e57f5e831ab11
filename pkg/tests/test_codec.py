import json
import unittest

from modules.core.services.errors import InvalidTilingError
from modules.tiling import (
    BoardTiling,
    BraceletTiling,
    Phase,
    Tile,
    dumps_record,
    dumps_records,
    enumerate_bracelet,
    loads_records,
    render_ascii,
    tiling_from_record,
    tiling_to_record,
)
from tests.isolation import isolate_settings

_restore_settings = None


def setUpModule():
    global _restore_settings
    _restore_settings = isolate_settings()


def tearDownModule():
    _restore_settings()


class RecordTests(unittest.TestCase):
    def test_board_record_layout(self):
        board = BoardTiling(2, 3, (Tile.square(2), Tile.domino(4)))
        self.assertEqual(
            dumps_record(board),
            '{"kind":"board","length":3,"m":2,"tiles":[{"t":"s","c":2},{"t":"d","c":4}]}',
        )

    def test_bracelet_record_carries_phase(self):
        bracelet = BraceletTiling(2, 2, Phase.OUT, (Tile.domino(3),))
        record = tiling_to_record(bracelet)
        self.assertEqual(list(record), ["kind", "length", "m", "phase", "tiles"])
        self.assertEqual(record["phase"], "out")
        self.assertEqual(tiling_from_record(record), bracelet)

    def test_enumeration_output_is_stable(self):
        text = dumps_records(enumerate_bracelet(4, 2))
        self.assertEqual(dumps_records(loads_records(text)), text)
        self.assertEqual(len(text.splitlines()), 2**4 * 7)

    def test_invalid_records_rejected(self):
        bad_records = [
            {"kind": "board", "length": 2, "m": 2, "tiles": [{"t": "s", "c": 1}]},
            {"kind": "board", "length": 1, "m": 2, "tiles": [{"t": "s", "c": 9}]},
            {"kind": "board", "length": 1, "m": 2, "phase": "in", "tiles": [{"t": "s", "c": 1}]},
            {"kind": "bracelet", "length": 1, "m": 2, "phase": "sideways", "tiles": [{"t": "s", "c": 1}]},
            {"kind": "ring", "length": 0, "m": 2, "tiles": []},
            {"kind": "board", "length": "1", "m": 2, "tiles": [{"t": "s", "c": 1}]},
            {"kind": "board", "length": 1, "m": 2, "tiles": [{"t": "s"}]},
        ]
        for record in bad_records:
            with self.assertRaises(InvalidTilingError, msg=json.dumps(record)):
                tiling_from_record(record)

    def test_loads_reports_bad_json_line(self):
        with self.assertRaises(InvalidTilingError) as ctx:
            loads_records('{"kind":"board","length":0,"m":2,"tiles":[]}\n{not json')
        self.assertIn("line 2", str(ctx.exception))


class AsciiTests(unittest.TestCase):
    def test_render(self):
        self.assertEqual(render_ascii(BoardTiling(2, 3, (Tile.square(1), Tile.domino(3)))), "[1][==3]")
        self.assertEqual(render_ascii(BraceletTiling(2, 3, Phase.OUT, (Tile.domino(2), Tile.square(1)))), "~[==2][1]")
        self.assertEqual(render_ascii(BraceletTiling(2, 0, Phase.IN, ())), "()")


if __name__ == "__main__":
    unittest.main()
