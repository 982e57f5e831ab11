"""Verify identity families over n = 0..n_max by several independent methods."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Dict, Optional

from modules.core.services.errors import (
    CertificateRefusedError,
    InternalInconsistencyError,
    UnsupportedIdentityError,
)
from modules.genfun import SequenceKind, closed_form_alt, closed_form_sum
from modules.sequences import lucas
from modules.tiling import ColorScheme, count_board, enumerate_board, partition_bracelet

from .catalog import IdentityEntry, get_identity, lucas_via_fibonacci
from .certificate import certify_cfinite, cfinite_sides
from .models import IdentityId, IdentityReport, IdentityRow, Method

logger = logging.getLogger(__name__)


def _check_range(n_max: int) -> None:
    if n_max < 0:
        raise ValueError(f"--n-max must be non-negative, got {n_max}")


def _start(identity: IdentityId | str, n_max: int, m: Optional[int], method: Method) -> tuple[IdentityEntry, int]:
    _check_range(n_max)
    entry = get_identity(identity)
    resolved = entry.resolve_m(m)
    if not entry.supports(method):
        supported = ", ".join(item.value for item in entry.methods)
        raise UnsupportedIdentityError(
            f"{entry.id.value} cannot be verified with --method {method.value}; supported: {supported}"
        )
    return entry, resolved


def _finish(report: IdentityReport) -> IdentityReport:
    if report.passed:
        logger.info(
            "%s verified by %s for n=0..%d (m=%d)",
            report.identity.value,
            report.method.value,
            report.n_max,
            report.m,
        )
    else:
        logger.warning(
            "%s failed %s verification (m=%d): rows %s, checks %s",
            report.identity.value,
            report.method.value,
            report.m,
            report.failures,
            report.failed_checks,
        )
    return report


def verify_direct(identity: IdentityId | str, n_max: int, m: Optional[int] = None) -> IdentityReport:
    """Sum the left-hand side term by term for every n."""

    entry, m = _start(identity, n_max, m, Method.DIRECT)
    report = IdentityReport(entry.id, Method.DIRECT, m, n_max)
    for n in range(n_max + 1):
        report.rows.append(IdentityRow(n, entry.lhs(n, m), entry.rhs(n, m)))
    return _finish(report)


def verify_by_tilings(
    identity: IdentityId | str,
    n_max: int,
    m: Optional[int] = None,
    *,
    cap: Optional[int] = None,
) -> IdentityReport:
    """Count the left-hand side as enumerated bracelets plus (m - 2) copies of shorter boards.

    With B_k the k-bracelets (two formal ones at k = 0) and A_k the k-boards, the
    fold correspondence gives sum_{k<=n} |B_k| + (m-2) sum_{k<n} |A_k| = 2 |A_n|.
    Adding (m-2) |A_n| turns that balance into the identity m |A_n| = m^(n+1) F(n+1).
    """

    entry, m = _start(identity, n_max, m, Method.TILINGS)
    scheme = ColorScheme(m)
    report = IdentityReport(entry.id, Method.TILINGS, m, n_max)
    balances = []
    bracelets_so_far = 0
    boards_before = 0
    for n in range(n_max + 1):
        bracelets = 2 if n == 0 else partition_bracelet(n, scheme, cap=cap).total()
        boards = len(enumerate_board(n, scheme, cap=cap))
        bracelets_so_far += bracelets
        balance = bracelets_so_far + (m - 2) * boards_before
        if balance != 2 * boards:
            report.failed_checks.append(f"balance n={n}")
        balances.append(
            {
                "n": n,
                "bracelets": str(bracelets_so_far),
                "extra_boards": str((m - 2) * boards_before),
                "twice_boards": str(2 * boards),
            }
        )
        lhs = bracelets_so_far + (m - 2) * (boards_before + boards)
        report.rows.append(IdentityRow(n, lhs, m * count_board(n, m)))
        boards_before += boards
    report.details["balance"] = balances
    return _finish(report)


def _weighted_by_closed_forms(n: int, m: int) -> int:
    value = closed_form_sum(SequenceKind.LUCAS, n, m) + Fraction(m - 2, m) * closed_form_sum(
        SequenceKind.FIB, n + 1, m
    )
    if value.denominator != 1:
        raise InternalInconsistencyError(f"closed-form evaluation at n={n}, m={m} is not an integer")
    return value.numerator


def _alternating_by_closed_forms(n: int, m: int) -> int:
    shifted_lucas = 2 * m ** (n + 1) - closed_form_alt(SequenceKind.LUCAS, n + 1, m)
    return shifted_lucas + (m - 2) * closed_form_alt(SequenceKind.FIB, n, m)


def verify_by_genfun(identity: IdentityId | str, n_max: int, m: Optional[int] = None) -> IdentityReport:
    """Evaluate the left-hand side through the generating-function closed forms.

    Weighted: sum m^k L_k + ((m-2)/m) sum_{1<=k<=n+1} m^k F_k.
    Alternating: 2 m^(n+1) - (alternating Lucas sum to n+1) + (m-2) (alternating Fibonacci sum to n).
    """

    entry, m = _start(identity, n_max, m, Method.GENFUN)
    evaluate: Callable[[int, int], int] = (
        _alternating_by_closed_forms if entry.alternating else _weighted_by_closed_forms
    )
    report = IdentityReport(entry.id, Method.GENFUN, m, n_max)
    for n in range(n_max + 1):
        report.rows.append(IdentityRow(n, evaluate(n, m), entry.rhs(n, m)))
    return _finish(report)


def verify_by_telescoping(identity: IdentityId | str, n_max: int, m: Optional[int] = None) -> IdentityReport:
    """Replay the telescoping proof: rewrite every L_i as F_(i-1) + F_(i+1) and match increments.

    With LHS(n) = w LHS(n-1) + t(n), each new summand t(n), written in Fibonacci
    numbers only, must equal RHS(n) - w RHS(n-1); the base case is n = 0.
    """

    entry, m = _start(identity, n_max, m, Method.TELESCOPING)
    weight = entry.step_weight(m)
    report = IdentityReport(entry.id, Method.TELESCOPING, m, n_max)
    lhs = rhs = 0
    for n in range(n_max + 1):
        summand = entry.term(n, n, m, lucas_via_fibonacci)
        if summand != entry.term(n, n, m, lucas):
            report.failed_checks.append(f"lucas rewrite n={n}")
        rhs_next = entry.rhs(n, m)
        expected = rhs_next - weight * rhs if n else rhs_next
        if summand != expected:
            report.failed_checks.append(f"step n={n}")
        lhs = weight * lhs + summand
        rhs = rhs_next
        report.rows.append(IdentityRow(n, lhs, rhs))
    report.details["step_weight"] = weight
    return _finish(report)


def verify_by_certificate(identity: IdentityId | str, n_max: int, m: Optional[int] = None) -> IdentityReport:
    """Tabulate both sides from their recurrences and attach the C-finite certificate."""

    entry, m = _start(identity, n_max, m, Method.CERTIFICATE)
    report = IdentityReport(entry.id, Method.CERTIFICATE, m, n_max)
    lhs_spec, rhs_spec = cfinite_sides(entry, m)
    for n, (lhs, rhs) in enumerate(zip(lhs_spec.terms(n_max + 1), rhs_spec.terms(n_max + 1))):
        report.rows.append(IdentityRow(n, lhs, rhs))
    try:
        certificate = certify_cfinite(entry.id, m)
    except CertificateRefusedError as exc:
        report.failed_checks.append(f"certificate refused at n={exc.witness}")
    else:
        report.details["certificate"] = certificate.to_dict()
    return _finish(report)


_METHODS: Dict[Method, Callable[..., IdentityReport]] = {
    Method.DIRECT: verify_direct,
    Method.GENFUN: verify_by_genfun,
    Method.TELESCOPING: verify_by_telescoping,
    Method.CERTIFICATE: verify_by_certificate,
}


def verify(
    identity: IdentityId | str,
    n_max: int,
    m: Optional[int] = None,
    method: Method | str = Method.DIRECT,
    *,
    cap: Optional[int] = None,
) -> IdentityReport:
    try:
        chosen = Method(method)
    except ValueError:
        known = ", ".join(item.value for item in Method)
        raise UnsupportedIdentityError(f"unknown --method {method!r}; expected one of {known}") from None
    if chosen is Method.TILINGS:
        return verify_by_tilings(identity, n_max, m, cap=cap)
    return _METHODS[chosen](identity, n_max, m)


__all__ = [
    "verify",
    "verify_direct",
    "verify_by_tilings",
    "verify_by_genfun",
    "verify_by_telescoping",
    "verify_by_certificate",
]
