"""Keep tests away from the user's stored preferences and FIBTILE_* variables."""

import os
from typing import Callable, List
from unittest.mock import patch

from modules.core.services import settings as settings_module
from modules.core.services.settings import ENV_CAP, ENV_DEV_MODE


def isolate_settings() -> Callable[[], None]:
    """Patch QSettings to return defaults, clear the overrides and return the undo callable."""

    qsettings = patch("modules.core.services.settings.QSettings")
    qsettings.start().return_value.value.side_effect = lambda key, default=None, type=None: default
    environ = patch.dict(os.environ, {}, clear=False)
    environ.start()
    os.environ.pop(ENV_CAP, None)
    os.environ.pop(ENV_DEV_MODE, None)
    settings_module._instance = None
    patchers: List = [environ, qsettings]

    def restore() -> None:
        settings_module._instance = None
        for patcher in patchers:
            patcher.stop()

    return restore
