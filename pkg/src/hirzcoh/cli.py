"""Command-line front end: cohomology calculators and the certificate replay.

Exit codes: 0 = success / overall PASS, 1 = a certificate failed,
2 = usage error (bad grammar, bad flags, refused requests).

Output is deterministic byte for byte for fixed flags, except the single
timestamped header line of ``verify`` (lines starting with ``#`` are meant
to be excluded from golden comparisons).  JSON reports carry no timestamp
at all.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import cohomology
from .hirzebruch import (
    ClassParseError,
    DivisorClass,
    SurfaceContext,
    format_class,
    parse_class,
)
from .p1 import (
    AmbiguousExtensionError,
    SplittingParseError,
    SplittingType,
    classify_extension,
    format_splitting,
    parse_splitting,
)
from .verifier import H, VerificationReport, _is_prime, run_full_replay


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _char_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"characteristic must be an integer, got {text!r}")
    if value != 0 and not _is_prime(value):
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or a prime, got {value}")
    return value


_CHAR_NOTE = (
    "note: --char has no effect here; line-bundle cohomology on F_e and P^1 "
    "is characteristic-independent"
)


def _cone_line(ctx: SurfaceContext, d: DivisorClass) -> str:
    line = (
        f"psef={_yesno(ctx.is_psef(d))} big={_yesno(ctx.is_big(d))} "
        f"nef={_yesno(ctx.is_nef(d))} ample={_yesno(ctx.is_ample(d))}"
    )
    if ctx.is_ample(d):
        line += " (= very ample on F_e)"
    return line


def _cmd_coh(args: argparse.Namespace) -> int:
    ctx = SurfaceContext(args.e)
    d = parse_class(args.klass)
    values = [
        f"h0={cohomology.h0(ctx, d)}",
        f"h1={cohomology.h1(ctx, d)}",
        f"h2={cohomology.h2(ctx, d)}",
        f"chi={cohomology.chi_rr(ctx, d)}",
    ]
    oracle_note = None
    try:
        values.append(f"oracle_h0={cohomology.brute_force_h0(ctx, d)}")
    except ValueError as exc:
        oracle_note = f"note: oracle column skipped: {exc}"
    print(f"class: {format_class(d)} = (a={d.a}, b={d.b}) on F_{ctx.e}")
    print(" ".join(values))
    print(_cone_line(ctx, d))
    if oracle_note:
        print(oracle_note)
    if args.char is not None:
        print(_CHAR_NOTE)
    return 0


def _cmd_cone(args: argparse.Namespace) -> int:
    ctx = SurfaceContext(args.e)
    d = parse_class(args.klass)
    print(f"class: {format_class(d)} = (a={d.a}, b={d.b}) on F_{ctx.e}")
    print(_cone_line(ctx, d))
    print(
        f"pairings: D.C={ctx.intersect(d, DivisorClass(1, 0))} "
        f"D.F={ctx.intersect(d, DivisorClass(0, 1))}"
    )
    return 0


def _parse_split_input(text: str) -> SplittingType:
    compact = "".join(text.split())
    if compact.startswith("ext(") and compact.endswith(")"):
        body = compact[4:-1].split(",")
        if len(body) != 3 or body[2] not in ("split", "nonsplit"):
            raise SplittingParseError(
                f"expected ext(sub,quot,split|nonsplit), got {text!r}"
            )
        try:
            sub, quot = int(body[0]), int(body[1])
        except ValueError:
            raise SplittingParseError(
                f"expected integer degrees in ext(...), got {text!r}"
            ) from None
        return classify_extension(sub, quot, body[2] == "nonsplit")
    return parse_splitting(text)


def _apply_op(st: SplittingType, token: str) -> SplittingType:
    name, sep, raw = token.partition(":")
    if not sep:
        raise ValueError(f"bad operation {token!r}: expected name:value")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"bad operation value in {token!r}: expected an integer") from None
    if name == "sym":
        return st.sym_power(value)
    if name == "twist":
        return st.twist(value)
    if name == "frob":
        return st.frobenius_pullback(value)
    raise ValueError(f"unknown operation {name!r}: expected sym, twist or frob")


def _cmd_split(args: argparse.Namespace) -> int:
    st = _parse_split_input(args.bundle)
    for token in args.ops:
        st = _apply_op(st, token)
    print(" ".join([args.bundle, *args.ops]).strip())
    print(f"= {format_splitting(st)}")
    print(f"rank={st.rank} h0={st.h0()} h1={st.h1()}")
    return 0


def render_report(report: VerificationReport, timestamp: str | None = None) -> str:
    lines = []
    if timestamp:
        lines.append(f"# hirzcoh verify - generated {timestamp}")
    ctx = SurfaceContext(report.e)
    lines.append(
        f"surface F_{report.e}: C.C = {-report.e}, C.F = 1, F.F = 0; "
        f"K = {format_class(ctx.canonical_class)}; "
        f"polarization H = {format_class(H)} (ample: {_yesno(ctx.is_ample(H))})"
    )
    mode_text = f"characteristic {report.characteristic}, mode {report.mode}"
    if report.beta_max is not None:
        mode_text += f", beta_max {report.beta_max}"
    mode_text += "; region b >= 1, l >= 0"
    lines.append(mode_text)
    lines.append("")
    for rec in report.records:
        lines.append(f"{rec.claim_id:<12}{rec.status:<6}{rec.headline}")
    lines.append("")
    if report.overall == "PASS":
        lines.append(
            f"overall PASS: {report.vanishing_claim_count()} claims certified; "
            "almost-nef evidence recorded"
        )
    else:
        first = report.first_failure()
        witness = json.dumps(first.witness) if first and first.witness else "none"
        where = first.claim_id if first else "?"
        lines.append(f"overall FAIL at {where}; witness: {witness}")
    lines.append(f"conclusion: {report.conclusion}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    ctx = SurfaceContext(args.e)
    report = run_full_replay(ctx, args.char, args.mode, args.beta_max)
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    print(render_report(report, timestamp=stamp))
    if args.json:
        payload = json.dumps(report.to_json_dict(), indent=2) + "\n"
        Path(args.json).write_text(payload, encoding="utf-8")
    return 0 if report.overall == "PASS" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hirzcoh",
        description=(
            "Exact line-bundle cohomology and positivity cones on Hirzebruch "
            "surfaces, plus a certified replay showing the nonsplit extension "
            "of O by O(C) on F_2 is almost nef but not pseudo-effective. "
            "Run without a subcommand for the characteristic-0 symbolic replay."
        ),
    )
    sub = parser.add_subparsers(dest="command")

    coh = sub.add_parser("coh", help="cohomology table for a divisor class")
    coh.add_argument("-e", type=int, default=2, help="Hirzebruch twist (default 2)")
    coh.add_argument("--char", type=_char_type, default=None, help="characteristic (informational)")
    coh.add_argument("klass", metavar="CLASS", help="divisor class, e.g. 'C+3F'")

    cone = sub.add_parser("cone", help="positivity-cone membership for a divisor class")
    cone.add_argument("-e", type=int, default=2, help="Hirzebruch twist (default 2)")
    cone.add_argument("klass", metavar="CLASS", help="divisor class, e.g. 'C+3F'")

    split = sub.add_parser("split", help="splitting-type calculator on P^1")
    split.add_argument(
        "bundle",
        metavar="TYPE",
        help="splitting type '[d1,d2,...]' or 'ext(sub,quot,split|nonsplit)'",
    )
    split.add_argument(
        "ops",
        nargs="*",
        metavar="OP",
        help="operations sym:m, twist:d, frob:q, applied left to right",
    )

    verify = sub.add_parser("verify", help="run the certificate replay")
    verify.add_argument("-e", type=int, default=2, help="Hirzebruch twist (default 2)")
    verify.add_argument("--char", type=_char_type, default=0, help="0 or a prime (default 0)")
    verify.add_argument("--mode", choices=("symbolic", "sweep"), default="symbolic")
    verify.add_argument("--beta-max", type=int, default=None, help="grid bound (sweep mode only)")
    verify.add_argument("--json", metavar="PATH", default=None, help="write the JSON report here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command is None:
            return _cmd_verify(
                argparse.Namespace(e=2, char=0, mode="symbolic", beta_max=None, json=None)
            )
        if args.command == "verify":
            if args.mode == "sweep" and args.beta_max is None:
                parser.error("--beta-max is required with --mode sweep")
            if args.mode == "symbolic" and args.beta_max is not None:
                parser.error("--beta-max is only meaningful with --mode sweep")
            return _cmd_verify(args)
        if args.command == "coh":
            return _cmd_coh(args)
        if args.command == "cone":
            return _cmd_cone(args)
        if args.command == "split":
            return _cmd_split(args)
        parser.error(f"unknown command {args.command!r}")
    except (ClassParseError, SplittingParseError, AmbiguousExtensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
