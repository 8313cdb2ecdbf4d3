"""Command-line interface.

    assocscheme analyze FILE [FILE ...] [--catalog NAME ...] [--e all|INDEX]
                        [--tol T] [--seed S] [--format text|machine] [--digits N]
    assocscheme dump NAME PATH
    assocscheme list

Exit codes: 0 success, 1 discrepancy between the detection routes,
2 input error, 3 precondition failure (class 1, repeated dual eigenvalues).
With several inputs the first nonzero code, in input order, is returned.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .analysis import (
    EXIT_DISCREPANCY,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_PRECONDITION,
    AnalysisOptions,
    analyze,
)
from .catalog import ALIASES, by_name
from .errors import InputError, NumericalError, PreconditionError
from .fileformat import dump_catalog, read_scheme
from .spectral import DEFAULT_SEED, DEFAULT_TOL


def _e_arg(text):
    if text == "all":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'all' or an integer index") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocscheme",
        description="Spectral data and P-/Q-polynomial detection for symmetric association schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze scheme files or catalog entries")
    an.add_argument("paths", nargs="*", help="scheme files (JSON)")
    an.add_argument("--catalog", action="append", default=[], metavar="NAME",
                    help="catalog entry, e.g. petersen, cube, hamming:3,2 (repeatable)")
    an.add_argument("--tol", type=float, default=DEFAULT_TOL)
    an.add_argument("--seed", type=int, default=DEFAULT_SEED)
    an.add_argument("--e", type=_e_arg, default="all", help="index of E_1 / A_1, or 'all'")
    an.add_argument("--format", choices=("text", "machine"), default="text")
    an.add_argument("--digits", type=int, default=6)

    du = sub.add_parser("dump", help="write a catalog entry as a scheme file")
    du.add_argument("name")
    du.add_argument("path")

    sub.add_parser("list", help="list catalog names")
    return parser


def _run_one(source, options, fmt):
    """Returns ``(exit_code, stdout_text, stderr_text)`` for one input."""
    kind, value = source
    try:
        if kind == "catalog":
            entry = by_name(value)
            name, table = entry.name, entry.table
        else:
            name, table = read_scheme(value)
        report = analyze(table, options, name=name)
    except InputError as exc:
        return EXIT_INPUT, "", f"{value}: input error: {exc}\n"
    except PreconditionError as exc:
        return EXIT_PRECONDITION, "", f"{value}: precondition: {exc}\n"
    except NumericalError as exc:
        return EXIT_DISCREPANCY, "", f"{value}: DISCREPANCY: {exc}\n"
    except ValueError as exc:
        return EXIT_INPUT, "", f"{value}: input error: {exc}\n"
    text = report.to_machine() + "\n" if fmt == "machine" else report.to_text()
    return report.exit_code, text, ""


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        print("petersen\nicosahedron\ncycle:N\nhamming:D,Q\njohnson:V,K")
        for alias, target in ALIASES.items():
            print(f"{alias} = {target}")
        return EXIT_OK
    if args.command == "dump":
        try:
            dump_catalog(args.name, args.path)
        except (InputError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        return EXIT_OK

    sources = [("path", p) for p in args.paths] + [("catalog", c) for c in args.catalog]
    if not sources:
        print("error: give at least one path or --catalog NAME", file=sys.stderr)
        return EXIT_INPUT
    options = AnalysisOptions(tol=args.tol, seed=args.seed, e=args.e, digits=args.digits)
    if len(sources) == 1:
        results = [_run_one(sources[0], options, args.format)]
    else:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda s: _run_one(s, options, args.format), sources))
    code = EXIT_OK
    for rc, out, err in results:
        sys.stdout.write(out)
        sys.stderr.write(err)
        if code == EXIT_OK:
            code = rc
    return code


if __name__ == "__main__":
    sys.exit(main())
