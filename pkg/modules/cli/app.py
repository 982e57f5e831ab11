"""Command-line front end: ``fibtile <command> ...``.

Exit statuses: 0 success, 1 verification failure, 2 usage or configuration
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from modules.bijection import verify_correspondence, verify_unfold
from modules.core.services.errors import (
    ConfigurationError,
    FibTileError,
    InternalInconsistencyError,
    SizeLimitError,
)
from modules.core.services.logger import setup_logging
from modules.core.services.settings import ENV_CAP, get_settings, resolve_cap
from modules.genfun import (
    Poly,
    RationalGF,
    closed_form_alt,
    closed_form_sum,
    printed_closed_form_alt,
    printed_closed_form_sum,
    series_coeffs,
)
from modules.identity import IdentityId, Method, load_catalog, verify
from modules.sequences import fib, lucas
from modules.tiling import count_board, count_bracelet, enumerate_board, enumerate_bracelet

from . import formatting

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _UsageError(FibTileError):
    """Flag combination rejected after parsing."""


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _colors(text: str) -> int:
    value = _non_negative(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"needs at least 2 square colors, got {value}")
    return value


def _format_flag(parser: argparse.ArgumentParser, choices: Sequence[str] = ("text", "json")) -> None:
    parser.add_argument("--format", choices=list(choices), default=choices[0], help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibtile",
        description="Colored tilings, Fibonacci-Lucas identities and their generating functions.",
    )
    parser.add_argument(
        "--cap",
        type=_positive,
        default=None,
        help=f"enumeration cap (overrides {ENV_CAP} and the stored setting)",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    seq = commands.add_parser("seq", help="print F(N) or L(N)")
    seq.add_argument("kind", choices=["fib", "lucas"])
    seq.add_argument("index", type=_non_negative, metavar="N")
    _format_flag(seq)

    count = commands.add_parser("count", help="count (n,m)-tilings by formula")
    count.add_argument("shape", choices=["board", "bracelet"])
    count.add_argument("--n", type=_non_negative, required=True)
    count.add_argument("--m", type=_positive, required=True)
    _format_flag(count)

    enumerate_cmd = commands.add_parser("enumerate", help="list every (n,m)-tiling")
    enumerate_cmd.add_argument("shape", choices=["board", "bracelet"])
    enumerate_cmd.add_argument("--n", type=_non_negative, required=True)
    enumerate_cmd.add_argument("--m", type=_positive, required=True)
    _format_flag(enumerate_cmd, ("ascii", "json"))

    verify_cmd = commands.add_parser("verify", help="verify an identity family for n = 0..N")
    verify_cmd.add_argument("identity", choices=[item.value for item in IdentityId])
    verify_cmd.add_argument("--n-max", type=_non_negative, required=True, dest="n_max")
    verify_cmd.add_argument("--m", type=_colors, default=None)
    verify_cmd.add_argument("--method", choices=[item.value for item in Method], default=Method.DIRECT.value)
    _format_flag(verify_cmd)

    gf = commands.add_parser("gf", help="generating functions")
    gf_commands = gf.add_subparsers(dest="gf_command", required=True)
    coeffs = gf_commands.add_parser("coeffs", help="power series coefficients of num/den")
    coeffs.add_argument("--num", help="numerator coefficients, lowest degree first")
    coeffs.add_argument("--den", help="denominator coefficients, lowest degree first")
    coeffs.add_argument("--gf", help='whole function as "num/den" (or "num//den" with p/q entries)')
    coeffs.add_argument("--count", type=_non_negative, required=True)
    _format_flag(coeffs)
    closed = gf_commands.add_parser("closed-form", help="closed form of a weighted prefix sum")
    closed.add_argument("kind", choices=["fib", "lucas"])
    closed.add_argument("--n", type=_non_negative, required=True)
    closed.add_argument("--m", type=_colors, required=True)
    closed.add_argument("--alternating", action="store_true", help="sum (-1)^k m^(n-k) X_k instead of m^k X_k")
    closed.add_argument("--printed", action="store_true", help="evaluate the sign-flipped alternating form as an exact fraction")
    _format_flag(closed)

    correspond = commands.add_parser("correspond", help="check the fold correspondence for n-boards")
    correspond.add_argument("--n", type=_positive, required=True)
    correspond.add_argument("--m", type=_colors, required=True)
    correspond.add_argument("--unfold", action="store_true", help="check the unfold map on n-bracelets instead")
    _format_flag(correspond)

    identities = commands.add_parser("identities", help="list the identity catalog")
    _format_flag(identities)
    return parser


def _cmd_seq(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    value = fib(args.index) if args.kind == "fib" else lucas(args.index)
    return EXIT_OK, formatting.format_value(value, args.format, kind=args.kind, n=args.index)


def _cmd_count(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    counter = count_board if args.shape == "board" else count_bracelet
    value = counter(args.n, args.m)
    return EXIT_OK, formatting.format_value(value, args.format, shape=args.shape, n=args.n, m=args.m)


def _cmd_enumerate(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    enumerator = enumerate_board if args.shape == "board" else enumerate_bracelet
    tilings = enumerator(args.n, args.m, cap=cap)
    return EXIT_OK, formatting.format_tilings(tilings, args.format)


def _cmd_verify(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    report = verify(args.identity, args.n_max, args.m, args.method, cap=cap)
    status = EXIT_OK if report.passed else EXIT_FAILED
    return status, formatting.format_identity_report(report, args.format)


def _read_gf(args: argparse.Namespace) -> RationalGF:
    if args.gf is not None:
        if args.num is not None or args.den is not None:
            raise _UsageError("--gf cannot be combined with --num/--den")
        try:
            return RationalGF.from_text(args.gf)
        except ValueError as exc:
            raise _UsageError(f"--gf: {exc}") from exc
    if args.num is None or args.den is None:
        raise _UsageError("give both --num and --den, or --gf")
    try:
        num = Poly.from_text(args.num)
    except ValueError as exc:
        raise _UsageError(f"--num: {exc}") from exc
    try:
        den = Poly.from_text(args.den)
    except ValueError as exc:
        raise _UsageError(f"--den: {exc}") from exc
    try:
        return RationalGF(num, den)
    except ValueError as exc:
        raise _UsageError(f"--den: {exc}") from exc


def _cmd_gf(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    if args.gf_command == "coeffs":
        coefficients = series_coeffs(_read_gf(args), args.count)
        return EXIT_OK, formatting.format_series(coefficients, args.format)
    if args.printed:
        value = (printed_closed_form_alt if args.alternating else printed_closed_form_sum)(args.kind, args.n, args.m)
    else:
        value = (closed_form_alt if args.alternating else closed_form_sum)(args.kind, args.n, args.m)
    context = {"kind": args.kind, "n": args.n, "m": args.m, "alternating": args.alternating, "printed": args.printed}
    return EXIT_OK, formatting.format_value(value, args.format, **context)


def _cmd_correspond(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    if args.unfold:
        unfold = verify_unfold(args.n, args.m, cap=cap)
        return (EXIT_OK if unfold.passed else EXIT_FAILED), formatting.format_unfold(unfold, args.format)
    report = verify_correspondence(args.n, args.m, cap=cap)
    return (EXIT_OK if report.passed else EXIT_FAILED), formatting.format_correspondence(report, args.format)


def _cmd_identities(args: argparse.Namespace, cap: int) -> tuple[int, str]:
    return EXIT_OK, formatting.format_catalog(load_catalog().values(), args.format)


_COMMANDS: Dict[str, Callable[[argparse.Namespace, int], tuple[int, str]]] = {
    "seq": _cmd_seq,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "gf": _cmd_gf,
    "correspond": _cmd_correspond,
    "identities": _cmd_identities,
}


def run(
    argv: Optional[Sequence[str]] = None,
    *,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Parse *argv*, run one command, write its output and return the exit status."""

    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
        dev_mode = settings.dev_mode
        setup_logging("FibTile", debug=dev_mode or args.verbose, enabled=dev_mode or args.verbose)
        cap = resolve_cap(args.cap)
    except ConfigurationError as exc:
        err.write(f"fibtile: error: {exc}\n")
        return EXIT_USAGE

    logger.debug("Running %s with cap %d", args.command, cap)
    try:
        status, output = _COMMANDS[args.command](args, cap)
    except SizeLimitError as exc:
        err.write(f"fibtile: error: {exc}; raise it with --cap or {ENV_CAP}\n")
        return EXIT_CAP
    except InternalInconsistencyError as exc:
        logger.error("Internal inconsistency: %s", exc)
        err.write(f"fibtile: error: {exc}\n")
        return EXIT_FAILED
    except (_UsageError, ConfigurationError, ValueError) as exc:
        err.write(f"fibtile: error: {exc}\n")
        return EXIT_USAGE

    if output:
        out.write(output + "\n")
    return status


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


__all__ = ["build_parser", "run", "main", "EXIT_OK", "EXIT_FAILED", "EXIT_USAGE", "EXIT_CAP"]
