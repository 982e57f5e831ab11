"""Exception hierarchy shared by every FibTile module."""

from __future__ import annotations


class FibTileError(RuntimeError):
    """Base exception for FibTile failures."""


class ConfigurationError(FibTileError):
    """Raised when a setting or environment override cannot be interpreted."""


class SizeLimitError(FibTileError):
    """Raised when an explicit enumeration would exceed the configured cap."""

    def __init__(self, what: str, count: int, cap: int) -> None:
        super().__init__(
            f"enumerating {what} would produce {count} objects, above the enumeration cap of {cap}"
        )
        self.what = what
        self.count = count
        self.cap = cap


class InvalidTilingError(FibTileError, ValueError):
    """Raised for tiles/tilings that break their invariants or fall outside an operation's domain."""


class NotExpandableError(FibTileError, ValueError):
    """Raised when a rational function has no power series expansion at z = 0."""


class InternalInconsistencyError(FibTileError):
    """Raised when an exact computation contradicts a proven fact (must never fire)."""


class UnsupportedIdentityError(FibTileError, ValueError):
    """Raised for unknown identities, bad parameters, or unsupported verification methods."""


class CertificateRefusedError(FibTileError):
    """Raised when a C-finite certificate finds a nonzero difference in its range."""

    def __init__(self, identity: str, witness: int, difference: int) -> None:
        super().__init__(
            f"certificate refused for {identity}: LHS - RHS = {difference} at n = {witness}"
        )
        self.identity = identity
        self.witness = witness
        self.difference = difference


__all__ = [
    "FibTileError",
    "ConfigurationError",
    "SizeLimitError",
    "InvalidTilingError",
    "NotExpandableError",
    "InternalInconsistencyError",
    "UnsupportedIdentityError",
    "CertificateRefusedError",
]
