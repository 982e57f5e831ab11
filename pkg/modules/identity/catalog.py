"""Catalog of the Fibonacci-Lucas identity families.

Each family is described by a Markdown file with YAML frontmatter under
``data/`` (name, parameters, supported methods, statement). The summands and
right-hand sides live here as term functions of (k, n, m) so that every index
shift is spelled out once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

import yaml

from modules.core.services.errors import ConfigurationError, UnsupportedIdentityError
from modules.sequences import fib, lucas

from .models import IdentityId, Method

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"

LucasFn = Callable[[int], int]
TermFn = Callable[[int, int, int, LucasFn], int]
RhsFn = Callable[[int, int], int]

_TERMS: Dict[IdentityId, TermFn] = {
    IdentityId.SURY: lambda k, n, m, L: 2**k * L(k),
    IdentityId.THEOREM2: lambda k, n, m, L: 3**k * (L(k) + fib(k + 1)),
    IdentityId.GENERAL: lambda k, n, m, L: m**k * (L(k) + (m - 2) * fib(k + 1)),
    IdentityId.ALTERNATING: lambda k, n, m, L: (-1) ** k * m ** (n - k) * (L(k + 1) + (m - 2) * fib(k)),
    IdentityId.COROLLARY: lambda k, n, m, L: (-1) ** k * 2 ** (n - k) * L(k + 1),
}

_RHS: Dict[IdentityId, RhsFn] = {
    IdentityId.SURY: lambda n, m: 2 ** (n + 1) * fib(n + 1),
    IdentityId.THEOREM2: lambda n, m: 3 ** (n + 1) * fib(n + 1),
    IdentityId.GENERAL: lambda n, m: m ** (n + 1) * fib(n + 1),
    IdentityId.ALTERNATING: lambda n, m: (-1) ** n * fib(n + 1),
    IdentityId.COROLLARY: lambda n, m: (-1) ** n * fib(n + 1),
}


@dataclass(frozen=True)
class IdentityEntry:
    """One identity family: metadata from its catalog file plus its term functions."""

    id: IdentityId
    name: str
    family: str
    fixed_m: Optional[int]
    min_m: int
    methods: Tuple[Method, ...]
    reduces_to: Optional[Tuple[IdentityId, int]]
    lhs_text: str
    rhs_text: str
    statement: str
    order: int = 0

    @property
    def alternating(self) -> bool:
        return self.family == "alternating"

    def supports(self, method: Method) -> bool:
        return method in self.methods

    def resolve_m(self, m: Optional[int]) -> int:
        """Return the effective m, rejecting values the family does not admit."""

        if self.fixed_m is not None:
            if m is not None and m != self.fixed_m:
                raise UnsupportedIdentityError(
                    f"{self.id.value} is stated for m = {self.fixed_m}; --m {m} does not apply"
                )
            return self.fixed_m
        if m is None:
            raise UnsupportedIdentityError(f"{self.id.value} needs a value for --m")
        if m < self.min_m:
            raise UnsupportedIdentityError(
                f"{self.id.value} needs --m >= {self.min_m}, got {m}"
            )
        return m

    def term(self, k: int, n: int, m: int, lucas_fn: LucasFn = lucas) -> int:
        """k-th summand of the left-hand side at upper limit n."""

        return _TERMS[self.id](k, n, m, lucas_fn)

    def lhs(self, n: int, m: int) -> int:
        return sum(self.term(k, n, m) for k in range(n + 1))

    def rhs(self, n: int, m: int) -> int:
        return _RHS[self.id](n, m)

    def step_weight(self, m: int) -> int:
        """w with LHS(n) = w * LHS(n-1) + term(n, n)."""

        return m if self.alternating else 1

    def describe(self) -> Dict[str, Any]:
        return {
            "id": self.id.value,
            "name": self.name,
            "family": self.family,
            "m": self.fixed_m if self.fixed_m is not None else f">= {self.min_m}",
            "methods": [method.value for method in self.methods],
            "statement": f"{self.lhs_text} = {self.rhs_text}",
        }


def _read_frontmatter(path: Path) -> Tuple[Dict[str, Any], str]:
    content = path.read_text(encoding="utf-8")
    if not content.startswith("---"):
        raise ConfigurationError(f"catalog file {path.name} has no YAML frontmatter")
    parts = content.split("---", 2)
    if len(parts) < 3:
        raise ConfigurationError(f"catalog file {path.name} has an unterminated frontmatter block")
    try:
        data = yaml.safe_load(parts[1]) or {}
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"catalog file {path.name} is not valid YAML: {exc}") from exc
    if not isinstance(data, Mapping):
        raise ConfigurationError(f"catalog file {path.name} frontmatter must be a mapping")
    return dict(data), parts[2].strip()


def _entry_from(data: Mapping[str, Any], body: str, source: Path) -> IdentityEntry:
    try:
        identity = IdentityId(str(data.get("id") or source.stem))
        methods = tuple(Method(str(value)) for value in data.get("methods") or [])
    except ValueError as exc:
        raise ConfigurationError(f"catalog file {source.name}: {exc}") from exc
    reduces = data.get("reduces_to")
    reduces_to = None
    if isinstance(reduces, Mapping):
        reduces_to = (IdentityId(str(reduces["id"])), int(reduces["m"]))
    fixed_m = data.get("fixed_m")
    return IdentityEntry(
        id=identity,
        name=str(data.get("name") or identity.value),
        family=str(data.get("family", "weighted")),
        fixed_m=int(fixed_m) if fixed_m is not None else None,
        min_m=int(data.get("min_m", 2) or 2),
        methods=methods or tuple(Method),
        reduces_to=reduces_to,
        lhs_text=str(data.get("lhs", "")),
        rhs_text=str(data.get("rhs", "")),
        statement=body,
        order=int(data.get("order", 0) or 0),
    )


@lru_cache(maxsize=1)
def load_catalog() -> Dict[IdentityId, IdentityEntry]:
    """Read every catalog file, ordered by its ``order`` field."""

    entries: List[IdentityEntry] = []
    for path in sorted(DATA_DIR.glob("*.md")):
        data, body = _read_frontmatter(path)
        entry = _entry_from(data, body, path)
        if entry.id not in _TERMS:
            logger.warning("Catalog file %s names %s, which has no term functions", path.name, entry.id.value)
            continue
        entries.append(entry)
    missing = set(_TERMS) - {entry.id for entry in entries}
    if missing:
        names = ", ".join(sorted(identity.value for identity in missing))
        raise ConfigurationError(f"identity catalog in {DATA_DIR} lacks entries for {names}")
    entries.sort(key=lambda entry: (entry.order, entry.id.value))
    logger.debug("Loaded %d identity families from %s", len(entries), DATA_DIR)
    return {entry.id: entry for entry in entries}


def clear_catalog_cache() -> None:
    load_catalog.cache_clear()


def as_identity(identity: IdentityId | str) -> IdentityId:
    try:
        return IdentityId(identity)
    except ValueError:
        known = ", ".join(item.value for item in IdentityId)
        raise UnsupportedIdentityError(f"unknown identity {identity!r}; expected one of {known}") from None


def get_identity(identity: IdentityId | str) -> IdentityEntry:
    return load_catalog()[as_identity(identity)]


def lucas_via_fibonacci(i: int) -> int:
    """L_i rewritten as F_(i-1) + F_(i+1), with L_0 = 2 F_1."""

    if i == 0:
        return 2 * fib(1)
    return fib(i - 1) + fib(i + 1)


__all__ = [
    "DATA_DIR",
    "IdentityEntry",
    "load_catalog",
    "clear_catalog_cache",
    "as_identity",
    "get_identity",
    "lucas_via_fibonacci",
]
