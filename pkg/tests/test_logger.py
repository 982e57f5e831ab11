import logging
import tempfile
import unittest
from pathlib import Path

from modules.core.services.logger import setup_logging


class SetupLoggingTests(unittest.TestCase):
    def tearDown(self):
        setup_logging(enabled=False)

    def test_disabled_installs_null_handler(self):
        result = setup_logging("FibTile", enabled=False)
        root = logging.getLogger()
        self.assertIsNone(result)
        self.assertEqual(len(root.handlers), 1)
        self.assertIsInstance(root.handlers[0], logging.NullHandler)
        self.assertGreater(root.level, logging.CRITICAL)

    def test_enabled_writes_rotating_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            log_file = setup_logging("Fib Tile", debug=True, enabled=True, log_dir=Path(tmp))
            self.assertEqual(log_file.name, "fib_tile.log")
            logging.getLogger("tests.logger").debug("hello from the test")
            for handler in logging.getLogger().handlers:
                handler.flush()
            self.assertIn("hello from the test", log_file.read_text(encoding="utf-8"))
            self.assertEqual(logging.getLogger().level, logging.DEBUG)
            setup_logging(enabled=False)

    def test_repeated_setup_does_not_stack_handlers(self):
        with tempfile.TemporaryDirectory() as tmp:
            setup_logging(enabled=True, log_dir=Path(tmp))
            setup_logging(enabled=True, log_dir=Path(tmp))
            self.assertEqual(len(logging.getLogger().handlers), 2)
            setup_logging(enabled=False)


if __name__ == "__main__":
    unittest.main()
