"""Shared test configuration (headless Qt, quiet logging)."""

import logging
import os
import warnings

os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")
warnings.simplefilter("ignore", ResourceWarning)
logging.getLogger("modules").addHandler(logging.NullHandler())
