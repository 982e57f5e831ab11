"""Fibonacci-Lucas identity families and their verification methods."""

from .catalog import IdentityEntry, as_identity, clear_catalog_cache, get_identity, load_catalog, lucas_via_fibonacci
from .certificate import certify_cfinite, cfinite_sides
from .models import Certificate, IdentityId, IdentityReport, IdentityRow, Method
from .verification import (
    verify,
    verify_by_certificate,
    verify_by_genfun,
    verify_by_telescoping,
    verify_by_tilings,
    verify_direct,
)

__all__ = [
    "IdentityId",
    "Method",
    "IdentityRow",
    "IdentityReport",
    "Certificate",
    "IdentityEntry",
    "load_catalog",
    "clear_catalog_cache",
    "as_identity",
    "get_identity",
    "lucas_via_fibonacci",
    "cfinite_sides",
    "certify_cfinite",
    "verify",
    "verify_direct",
    "verify_by_tilings",
    "verify_by_genfun",
    "verify_by_telescoping",
    "verify_by_certificate",
]
