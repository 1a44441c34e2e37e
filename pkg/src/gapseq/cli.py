"""Command-line front end: enumerate, count, validate, analyze, ledger.

Exit codes: 0 success (and valid input), 1 invalid gap sequence,
2 genus cap exceeded, 64 usage or parse error.  Data goes to stdout,
diagnostics to stderr.  The environment variable GAPSEQ_MAX_GENUS can
lower (never raise) the hard genus caps.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .core import (
    GapSequence,
    GenusCapExceeded,
    ValidationReport,
    validate_gap_sequence,
)
from .enumeration import Caps, count_gap_sequences, brute_force_enumerate, tree_enumerate
from .ledger import dimension_ledger, verify_riemann_roch
from .output import record_for
from .structure import exceptional_sequence, hyperelliptic_sequence

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code of this tool (64, not 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_gaps(text: str, parser: _Parser) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            parser.error(f"--gaps expects comma-separated integers, got {token!r}")
    return tuple(values)


def _print_report(report: ValidationReport, stream) -> None:
    stream.write("valid\n" if report.valid else "invalid\n")
    for violation in report.violations:
        stream.write(violation.render() + "\n")


def _report_json(report: ValidationReport) -> str:
    payload = {
        "valid": report.valid,
        "violations": [
            {
                "constraint": v.constraint,
                "witness": list(v.witness),
                "message": v.message,
            }
            for v in report.violations
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _sequence_from_args(args, parser: _Parser) -> GapSequence | int:
    """Resolve --gaps/--genus, --hyperelliptic, or --exceptional.

    Returns a validated GapSequence, or an exit code when the candidate
    fails validation (violations go to stderr).
    """
    sources = [
        args.gaps is not None,
        args.hyperelliptic is not None,
        args.exceptional is not None,
    ]
    if sum(sources) != 1:
        parser.error("give exactly one of --gaps, --hyperelliptic, --exceptional")
    if args.hyperelliptic is not None:
        if args.hyperelliptic < 1:
            parser.error("--hyperelliptic requires genus >= 1")
        return hyperelliptic_sequence(args.hyperelliptic)
    if args.exceptional is not None:
        if args.exceptional < 2:
            parser.error("--exceptional requires genus >= 2")
        return exceptional_sequence(args.exceptional)
    if args.genus is None:
        parser.error("--gaps requires --genus")
    gaps = _parse_gaps(args.gaps, parser)
    report = validate_gap_sequence(gaps, args.genus)
    if not report.valid:
        _print_report(report, sys.stderr)
        return EXIT_INVALID
    return GapSequence(genus=args.genus, gaps=tuple(sorted(set(gaps))), validated=True)


def _emit_records(records, fmt: str, count: int | None, out) -> None:
    if fmt == "plain":
        for record in records:
            out.write(record.plain_line() + "\n")
    elif fmt == "json":
        for record in records:
            out.write(record.to_json() + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        if records:
            writer.writerow(records[0].csv_fields())
        for record in records:
            writer.writerow(record.to_csv_row())
    if count is not None:
        if fmt == "json":
            out.write(json.dumps({"count": count}, separators=(",", ":")) + "\n")
        else:
            out.write(f"count={count}\n")


def cmd_enumerate(args, parser: _Parser) -> int:
    caps = Caps.from_env()
    if args.method == "oracle":
        result = brute_force_enumerate(args.genus, caps=caps)
    else:
        result = tree_enumerate(args.genus, caps=caps, workers=args.workers)
    records = [
        record_for(seq, include_ledger=args.include_ledger)
        for seq in result.sequences
    ]
    _emit_records(records, args.format, result.count, sys.stdout)
    return EXIT_OK


def cmd_count(args, parser: _Parser) -> int:
    caps = Caps.from_env()
    count = count_gap_sequences(
        args.genus, args.method, caps=caps, workers=args.workers
    )
    sys.stdout.write(f"{count}\n")
    return EXIT_OK


def cmd_validate(args, parser: _Parser) -> int:
    gaps = _parse_gaps(args.gaps, parser)
    report = validate_gap_sequence(gaps, args.genus)
    if args.format == "json":
        sys.stdout.write(_report_json(report) + "\n")
    else:
        _print_report(report, sys.stdout)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_analyze(args, parser: _Parser) -> int:
    seq = _sequence_from_args(args, parser)
    if isinstance(seq, int):
        return seq
    record = record_for(seq, include_ledger=args.include_ledger)
    if args.format == "plain":
        out = sys.stdout
        out.write(record.plain_line() + "\n")
        out.write(f"multiplicity={record.multiplicity}\n")
        out.write(f"frobenius={record.frobenius}\n")
        out.write(f"classification={record.classification}\n")
        runs = ",".join(f"{j}:{length}" for j, length in record.ap_runs)
        out.write(f"ap_runs={{{runs}}}\n")
        if record.ledger is not None:
            out.write(f"ell={list(record.ledger.ell)}\n")
            out.write(f"i={list(record.ledger.i)}\n")
    else:
        _emit_records([record], args.format, None, sys.stdout)
    return EXIT_OK


def cmd_ledger(args, parser: _Parser) -> int:
    seq = _sequence_from_args(args, parser)
    if isinstance(seq, int):
        return seq
    ledger = dimension_ledger(seq)
    verdict = "valid" if verify_riemann_roch(ledger).valid else "invalid"
    out = sys.stdout
    if args.format == "json":
        payload = {
            "genus": ledger.genus,
            "gaps": list(seq.gaps),
            "canonical_degree": ledger.canonical_degree,
            "ell": list(ledger.ell),
            "i": list(ledger.i),
            "verification": verdict,
        }
        out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "ell", "i"])
        for n in range(len(ledger.ell)):
            writer.writerow([n, ledger.ell[n], ledger.i[n]])
        out.write(f"verification={verdict}\n")
    else:
        gaps = ",".join(str(n) for n in seq.gaps)
        out.write(f"g={ledger.genus} gaps={{{gaps}}}\n")
        out.write(f"canonical_degree={ledger.canonical_degree}\n")
        out.write("n ell i\n")
        for n in range(len(ledger.ell)):
            out.write(f"{n} {ledger.ell[n]} {ledger.i[n]}\n")
        out.write(f"verification={verdict}\n")
    return EXIT_OK


def _add_sequence_source(sub: _Parser) -> None:
    sub.add_argument("--gaps", help="comma-separated gap values, e.g. 1,3,5")
    sub.add_argument("--genus", type=int, help="genus of the candidate")
    sub.add_argument(
        "--hyperelliptic",
        type=int,
        metavar="G",
        help="use the gap set {1,3,...,2G-1}",
    )
    sub.add_argument(
        "--exceptional",
        type=int,
        metavar="G",
        help="use the gap set {1,...,G-1,G+1}",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="gapseq",
        description="Enumerate, validate, and analyze gap sequences of a genus.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_enum = sub.add_parser("enumerate", help="list all gap sequences of a genus")
    p_enum.add_argument("--genus", type=int, required=True)
    p_enum.add_argument("--method", choices=("oracle", "tree"), default="tree")
    p_enum.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_enum.add_argument("--include-ledger", action="store_true")
    p_enum.add_argument(
        "--workers", type=int, default=1, help="worker processes, 0 = auto"
    )
    p_enum.set_defaults(func=cmd_enumerate, subparser=p_enum)

    p_count = sub.add_parser("count", help="count gap sequences of a genus")
    p_count.add_argument("--genus", type=int, required=True)
    p_count.add_argument("--method", choices=("oracle", "tree"), default="tree")
    p_count.add_argument(
        "--workers", type=int, default=1, help="worker processes, 0 = auto"
    )
    p_count.set_defaults(func=cmd_count, subparser=p_count)

    p_val = sub.add_parser("validate", help="check one candidate gap set")
    p_val.add_argument("--gaps", required=True)
    p_val.add_argument("--genus", type=int, required=True)
    p_val.add_argument("--format", choices=("json", "plain"), default="plain")
    p_val.set_defaults(func=cmd_validate, subparser=p_val)

    p_an = sub.add_parser("analyze", help="classification and AP decomposition")
    _add_sequence_source(p_an)
    p_an.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_an.add_argument("--include-ledger", action="store_true")
    p_an.set_defaults(func=cmd_analyze, subparser=p_an)

    p_led = sub.add_parser("ledger", help="dimension staircase of a sequence")
    _add_sequence_source(p_led)
    p_led.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_led.set_defaults(func=cmd_ledger, subparser=p_led)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, args.subparser)
    except GenusCapExceeded as exc:
        sys.stderr.write(f"gapseq: {exc}\n")
        return EXIT_CAP
    except ValueError as exc:
        sys.stderr.write(f"gapseq: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
