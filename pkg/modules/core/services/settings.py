from __future__ import annotations

import os

from PySide6.QtCore import QSettings

from .errors import ConfigurationError

# Constants
KEY_ENUMERATION_CAP = "enumeration/cap"
KEY_DEV_MODE = "app/dev_mode"
KEY_CERTIFICATE_BOUND = "identity/certificate_order_bound"

ENV_CAP = "FIBTILE_CAP"
ENV_DEV_MODE = "FIBTILE_DEV_MODE"

DEFAULT_ENUMERATION_CAP = 10**7
DEFAULT_CERTIFICATE_BOUND = 8

_TRUTHY = {"1", "true", "yes", "on"}


class Settings:
    """Simple wrapper around QSettings for tool-wide preferences."""

    def __init__(self) -> None:
        self._settings = QSettings("FibTile", "FibTile")

    @property
    def enumeration_cap(self) -> int:
        env = os.environ.get(ENV_CAP)
        if env:
            return _parse_cap(env, ENV_CAP)
        value = self._settings.value(KEY_ENUMERATION_CAP, DEFAULT_ENUMERATION_CAP)
        try:
            cap = int(value)
        except (TypeError, ValueError):
            return DEFAULT_ENUMERATION_CAP
        return cap if cap >= 1 else DEFAULT_ENUMERATION_CAP

    @enumeration_cap.setter
    def enumeration_cap(self, value: int) -> None:
        if int(value) < 1:
            raise ConfigurationError("enumeration cap must be a positive integer")
        self._settings.setValue(KEY_ENUMERATION_CAP, int(value))

    @property
    def dev_mode(self) -> bool:
        env = os.environ.get(ENV_DEV_MODE)
        if env:
            return env.strip().lower() in _TRUTHY
        return bool(self._settings.value(KEY_DEV_MODE, False, type=bool))

    @dev_mode.setter
    def dev_mode(self, enabled: bool) -> None:
        self._settings.setValue(KEY_DEV_MODE, enabled)

    @property
    def certificate_order_bound(self) -> int:
        value = self._settings.value(KEY_CERTIFICATE_BOUND, DEFAULT_CERTIFICATE_BOUND)
        try:
            bound = int(value)
        except (TypeError, ValueError):
            return DEFAULT_CERTIFICATE_BOUND
        return max(bound, 1)

    @certificate_order_bound.setter
    def certificate_order_bound(self, value: int) -> None:
        self._settings.setValue(KEY_CERTIFICATE_BOUND, int(value))


def _parse_cap(raw: str, source: str) -> int:
    try:
        cap = int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{source} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ConfigurationError(f"{source} must be a positive integer, got {raw!r}")
    return cap


def resolve_cap(cap: int | None) -> int:
    """Return an explicit cap unchanged, or the configured one when *cap* is None."""

    if cap is None:
        return get_settings().enumeration_cap
    if int(cap) < 1:
        raise ConfigurationError(f"enumeration cap must be a positive integer, got {cap}")
    return int(cap)


_instance = None

def get_settings() -> Settings:
    global _instance
    if _instance is None:
        _instance = Settings()
    return _instance
