"""Central logging configuration for FibTile.

setup_logging() sends records to stderr and to a rotating file; stdout is left
to command output. Library modules only call ``logging.getLogger(__name__)``.
"""

import logging
import os
import platform
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
MAX_LOG_BYTES = 5 * 1024 * 1024
BACKUP_COUNT = 3


def get_log_dir(app_name: str) -> Path:
    """Return the platform-specific directory for application logs."""
    system = platform.system()
    if system == "Windows":
        base = Path(os.getenv("LOCALAPPDATA", os.path.expanduser("~\\AppData\\Local")))
        return base / app_name / "Logs"
    if system == "Darwin":
        return Path.home() / "Library" / "Logs" / app_name
    return Path.home() / ".local" / "state" / app_name / "logs"


def setup_logging(
    app_name: str = "FibTile",
    debug: bool = False,
    enabled: bool = True,
    log_dir: Optional[Path] = None,
) -> Optional[Path]:
    """Configure the root logger and return the log file path (None when disabled).

    Args:
        app_name: Name of the application (used for directory and file naming).
        debug: If True, log at DEBUG, else INFO.
        enabled: If False, install a NullHandler and silence the root logger.
        log_dir: Directory for the rotating file; defaults to get_log_dir(app_name).
    """
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
        handler.close()

    if not enabled:
        root_logger.addHandler(logging.NullHandler())
        root_logger.setLevel(logging.CRITICAL + 1)
        return None

    target_dir = log_dir or get_log_dir(app_name)
    target_dir.mkdir(parents=True, exist_ok=True)
    log_file = target_dir / (app_name.lower().replace(" ", "_") + ".log")

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    file_handler = RotatingFileHandler(
        log_file, maxBytes=MAX_LOG_BYTES, backupCount=BACKUP_COUNT, encoding="utf-8"
    )
    file_handler.setFormatter(formatter)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)

    root_logger.setLevel(logging.DEBUG if debug else logging.INFO)
    root_logger.addHandler(file_handler)
    root_logger.addHandler(console_handler)

    logging.debug("Logging to %s", log_file)
    return log_file
