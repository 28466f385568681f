"""Command-line entry point.

Exit codes: 0 success, 1 invariant violation (``validate``), 2 parse
error, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .corpus import (
    DEFAULT_EPS_GRID,
    DEFAULT_STD_GRID,
    build_model,
    classify_file,
    lattice_report,
    read_corpus,
    validate_file,
)
from .errors import CorpusError, InvalidLabel, NeutrosophyError
from .models import (
    ComplementSpace,
    is_dialetheist_set,
    is_dialetheist_space,
    is_trivialist_set,
    is_trivialist_space,
    lift_label,
)
from .taxonomy import KINDS, display_name

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}")


def _report_problems(problems) -> None:
    for loc, msg in problems:
        print(f"error: {loc}: {msg}", file=sys.stderr)


def _print_table(records, as_json: bool) -> None:
    if as_json:
        for rec in records:
            print(json.dumps(rec.to_json()))
        return
    rows = [
        (rec.id, ", ".join(sorted(display_name(l, rec.kind) for l in rec.labels)), rec.n_inf, rec.n_sup)
        for rec in records
    ]
    header = ("id", "classes", "n_inf", "n_sup")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
    for row in [header] + rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def cmd_classify(args) -> int:
    try:
        records = classify_file(args.file, args.kind)
    except CorpusError as exc:
        _print_table(exc.records, args.json)
        _report_problems(exc.problems)
        return EXIT_PARSE
    _print_table(records, args.json)
    return EXIT_OK


def cmd_validate(args) -> int:
    violations, problems = validate_file(args.file, args.kind)
    _report_problems(problems)
    for loc, msg in violations:
        print(f"violation: {loc}: {msg}")
    if problems:
        return EXIT_PARSE
    if violations:
        return EXIT_VIOLATION
    print("ok")
    return EXIT_OK


def cmd_lattice(args) -> int:
    report = lattice_report(args.std_grid, args.eps_grid)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
        return EXIT_OK
    print(f"grid triples: {report.n_triples}")
    print("witnessed:")
    for label, count in report.counts.items():
        print(f"  {label}: {count}")
    print("implications (A => B, no counterexample):")
    for a, b in report.implications():
        print(f"  {a} => {b}")
    print("exclusions (never together):")
    for a, b in report.exclusions():
        print(f"  {a} # {b}")
    return EXIT_OK


def _run_check(model, check: str) -> bool:
    space = isinstance(model, ComplementSpace)
    if check == "dialetheist":
        return is_dialetheist_space(model) if space else is_dialetheist_set(model)
    if check == "trivialist":
        return is_trivialist_space(model) if space else is_trivialist_set(model)
    if check.startswith("lift:"):
        if space:
            raise UsageError("lift checks apply to element sets, not complement spaces")
        try:
            return lift_label(model, check[len("lift:"):])
        except InvalidLabel as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown check {check!r}; use dialetheist, trivialist or lift:<Label>")


def cmd_model(args) -> int:
    entries, problems = read_corpus(args.file, args.kind)
    if problems:
        _report_problems(problems)
        return EXIT_PARSE
    try:
        model = build_model(entries)
    except (NeutrosophyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    result = _run_check(model, args.check)
    if args.json:
        print(json.dumps({"check": args.check, "size": len(model), "result": result}))
    else:
        print(f"{args.check}: {'true' if result else 'false'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="neutrosophy", description="Classify neutrosophic (T,I,F) triples.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="label every record of a file")
    p.add_argument("file")
    p.add_argument("--kind", choices=KINDS, default="element")
    p.add_argument("--json", action="store_true", help="one JSON object per record")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("validate", help="check structural invariants of every record")
    p.add_argument("file")
    p.add_argument("--kind", choices=KINDS, default="element")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lattice", help="implications and exclusions over a singleton grid")
    p.add_argument("--std-grid", type=_rational_list, default=list(DEFAULT_STD_GRID))
    p.add_argument("--eps-grid", type=_rational_list, default=list(DEFAULT_EPS_GRID))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("model", help="relational checks over a whole file")
    p.add_argument("file")
    p.add_argument("--check", required=True, help="dialetheist | trivialist | lift:<Label>")
    p.add_argument("--kind", choices=KINDS, default="element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_model)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
