"""Console entry point for FibTile."""

from __future__ import annotations

import logging
import sys
from typing import List, Optional

from modules.cli import run


def main(argv: Optional[List[str]] = None) -> int:
    """Run one ``fibtile`` command and return its exit status."""

    try:
        return run(argv)
    except KeyboardInterrupt:
        logging.info("Interrupted by user")
        return 130


__all__ = ["main"]

if __name__ == "__main__":
    sys.exit(main())
