"""Command-line interface.

    posetsim compare RUN1 RUN2 [--measures ...] [--phi-ratio R] [--qrels FILE] [--verify]
    posetsim matrix RUN... --measure NAME
    posetsim export RUN --relations same_cluster,greater_than --format dot|csv

Exit codes: 0 success, 1 usage or parse error, 2 some measure undefined,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import PosetSimError, UnsupportedRelation
from .ordered import FuzzyWeighting
from .relational import RelationKind, adjacency, export_dot, relation_sum
from .report import DEFAULT_CUTOFFS, Options, align, applicable_measures, compare, evaluate, format_value, verify
from .runfile import read_qrels, read_runfile

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _cutoffs(text: str) -> tuple:
    try:
        values = tuple(int(t) for t in _csv_list(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cut-offs must be integers: {text!r}") from None
    if not values or any(k < 1 for k in values):
        raise argparse.ArgumentTypeError("cut-offs must be positive integers")
    return values


def _add_measure_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi-ratio", type=float, default=0.5, metavar="R",
                   help="geometric class weighting phi(i) = R**(i-1), 0 < R < 1 (default 0.5)")
    p.add_argument("--cutoffs", type=_cutoffs, default=DEFAULT_CUTOFFS, metavar="K1,K2,...",
                   help="cut-off ranks for precision/recall with --qrels")
    p.add_argument("--qrels", type=Path, help="file of relevant ids, one per line")
    p.add_argument("--beta", type=float, default=1.0, help="generalized Dice beta (default 1)")
    p.add_argument("--strict-universe", action="store_true",
                   help="fail instead of restricting partitions to their shared elements")
    p.add_argument("--coerce", action="store_true",
                   help="convert inputs of different shapes to a common shape")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posetsim", description="Similarity between IR answer sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", help="report every applicable measure for two runs")
    p.add_argument("run1", type=Path)
    p.add_argument("run2", type=Path)
    p.add_argument("--measures", type=_csv_list, help="comma-separated subset of measures")
    p.add_argument("--verify", action="store_true", help="cross-check closed forms against brute force")
    _add_measure_flags(p)

    p = sub.add_parser("matrix", help="pairwise similarity matrix for one measure")
    p.add_argument("runs", type=Path, nargs="+")
    p.add_argument("--measure", required=True)
    _add_measure_flags(p)

    p = sub.add_parser("export", help="write relation graphs (DOT) or adjacency matrices (CSV)")
    p.add_argument("run", type=Path)
    p.add_argument("--relations", type=_csv_list, default=[], help="comma-separated relation kinds")
    p.add_argument("--format", choices=("dot", "csv"), default="dot")
    p.add_argument("--out", type=Path, help="output file (default stdout)")
    return parser


def _options(args) -> Options:
    try:
        weighting = FuzzyWeighting.geometric(args.phi_ratio)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.beta <= 0:
        raise UsageError("--beta must be positive")
    return Options(
        weighting=weighting,
        cutoffs=args.cutoffs,
        qrels=read_qrels(args.qrels) if args.qrels else None,
        strict=args.strict_universe,
        beta=args.beta,
        coerce=args.coerce,
    )


def cmd_compare(args, out) -> int:
    opts = _options(args)
    rs1, rs2 = read_runfile(args.run1), read_runfile(args.run2)
    report = compare(rs1, rs2, opts, measures=args.measures)
    out.write(report.render())
    for line in report.undefined:
        print(f"posetsim: {line.name} undefined: {line.error}", file=sys.stderr)
    if args.verify:
        problems = verify(rs1, rs2, opts)
        if problems:
            for msg in problems:
                print(f"posetsim: verification mismatch: {msg}", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_UNDEFINED if report.undefined else EXIT_OK


def cmd_matrix(args, out) -> int:
    if len(args.runs) < 2:
        raise UsageError("matrix needs at least two run files")
    opts = _options(args)
    runs = [read_runfile(p) for p in args.runs]
    labels = [r.label for r in runs]
    for r in runs[1:]:
        align(runs[0], r, opts.coerce)

    undefined = False
    rows = [",".join([""] + labels)]
    for r1 in runs:
        cells = [r1.label]
        for r2 in runs:
            table = applicable_measures(r1, r2, opts)
            if args.measure not in table:
                raise UsageError(f"measure {args.measure!r} is not defined for {r1.shape} inputs")
            line = evaluate(args.measure, table[args.measure])
            if line.value is None:
                undefined = True
                cells.append("NA")
            else:
                cells.append(format_value(line.value))
        rows.append(",".join(cells))
    out.write("\n".join(rows) + "\n")
    return EXIT_UNDEFINED if undefined else EXIT_OK


def cmd_export(args, out) -> int:
    rs = read_runfile(args.run)
    kinds = [RelationKind.parse(k) for k in args.relations]
    if args.format == "dot":
        text = export_dot(rs, kinds, name=rs.label or "G")
    else:
        if not kinds:
            raise UnsupportedRelation("CSV export needs at least one relation")
        matrix = adjacency(rs, kinds[0])
        for k in kinds[1:]:
            matrix = relation_sum(matrix, adjacency(rs, k))
        text = matrix.to_csv()
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {"compare": cmd_compare, "matrix": cmd_matrix, "export": cmd_export}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, PosetSimError, OSError) as exc:
        print(f"posetsim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
