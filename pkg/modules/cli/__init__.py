"""Command-line interface for FibTile."""

from .app import EXIT_CAP, EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main, run

__all__ = ["build_parser", "run", "main", "EXIT_OK", "EXIT_FAILED", "EXIT_USAGE", "EXIT_CAP"]
