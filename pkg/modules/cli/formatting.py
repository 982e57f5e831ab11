"""Text and JSON rendering for command output."""

from __future__ import annotations

import json
from typing import Any, Iterable, List, Mapping

from modules.bijection import CorrespondenceReport, UnfoldReport
from modules.identity import IdentityEntry, IdentityReport
from modules.tiling import dumps_records, render_ascii


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2)


def format_value(value: Any, fmt: str, **context: Any) -> str:
    """A single exact number; JSON wraps it with its context, numbers as decimal strings."""

    if fmt == "json":
        return to_json({**context, "value": str(value)})
    return str(value)


def format_tilings(tilings: Iterable[Any], fmt: str) -> str:
    if fmt == "json":
        return dumps_records(tilings)
    return "\n".join(render_ascii(tiling) for tiling in tilings)


def format_series(values: Iterable[Any], fmt: str) -> str:
    items = [str(value) for value in values]
    if fmt == "json":
        return to_json({"coefficients": items})
    return " ".join(items)


def format_identity_report(report: IdentityReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report.to_dict())
    lines: List[str] = ["n\tlhs\trhs"]
    for row in report.rows:
        marker = "" if row.holds else "\t<- differs"
        lines.append(f"{row.n}\t{row.lhs}\t{row.rhs}{marker}")
    for check in report.failed_checks:
        lines.append(f"failed check: {check}")
    certificate = report.details.get("certificate")
    if certificate:
        lines.append(
            f"certificate: closure order {certificate['closure_order']}, "
            f"zero differences for n = 0..{certificate['bound']}"
        )
    lines.append(f"{report.identity.value} ({report.method.value}, m={report.m}): {report.verdict}")
    return "\n".join(lines)


def format_correspondence(report: CorrespondenceReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report.to_dict())
    lines = [f"boards n={report.n} m={report.m}: {report.board_count} {_classes(report.board_classes)}"]
    for tally in report.per_length:
        lines.append(
            f"k={tally.k}: {_classes(tally.classes)} extra={tally.extra_boards}"
        )
    lines.append(f"cumulative: {_classes(report.cumulative)}")
    lines.append(
        f"tally: classes {sum(report.cumulative.values())} + zero-bracelets {report.zero_bracelets}"
        f" + extra {report.extra_boards} = {report.total} (2|A| = {report.target})"
    )
    lines.append(f"single zero-bracelet tally: {report.single_zero_tally}")
    for name, ok in report.checks.items():
        if not ok:
            lines.append(f"failed check: {name}")
    if report.witness is not None:
        lines.append(f"witness: {report.witness.message}")
    lines.append(f"verdict: {'pass' if report.passed else 'fail'}")
    return "\n".join(lines)


def format_unfold(report: UnfoldReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report.to_dict())
    lines = [
        f"bracelets n={report.n} m={report.m}: {report.in_phase} in phase, {report.out_of_phase} out of phase",
        f"distinct board images: {report.board_images}, straightened images: {report.straightened_images}",
    ]
    lines.extend(f"failed check: {name}" for name, ok in report.checks.items() if not ok)
    lines.append(f"verdict: {'pass' if report.passed else 'fail'}")
    return "\n".join(lines)


def format_catalog(entries: Iterable[IdentityEntry], fmt: str) -> str:
    described = [entry.describe() for entry in entries]
    if fmt == "json":
        return to_json(described)
    return "\n".join(
        f"{item['id']}\t{item['name']}\tm {item['m']}\t{item['statement']}" for item in described
    )


def _classes(sizes: Mapping[str, int]) -> str:
    return " ".join(f"{label}={count}" for label, count in sizes.items())


__all__ = [
    "to_json",
    "format_value",
    "format_tilings",
    "format_series",
    "format_identity_report",
    "format_correspondence",
    "format_unfold",
    "format_catalog",
]
