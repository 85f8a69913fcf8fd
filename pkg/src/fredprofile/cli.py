"""Command line interface.

Commands: analyze (classify one operator document at one point), spectrum
(grid scan to CSV or JSON), drazin (Drazin inverse of a single matrix
document), verify (randomized property suites).

Exit codes: 0 success, 1 usage error, 2 document parse error,
3 unsupported point, 4 drazin on a non-matrix document, 5 verify found a
property violation.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .docio import (
    AnalysisReport,
    build_report,
    parse_document,
    parse_rational,
)
from .errors import DocumentError, UnsupportedPoint
from .model import Point
from .spectra import GridSpec, SPECTRUM_NAMES, scan, scan_to_csv, scan_to_json
from .structure import drazin_inverse
from .verify import SUITE_NAMES, run as run_suites


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="fredprofile", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify a document at one point")
    pa.add_argument("--in", dest="infile", required=True, metavar="F")
    pa.add_argument(
        "--lambda",
        dest="lam",
        default="0,0",
        metavar="RE,IM",
        help="rational point, e.g. 1/2,-3",
    )
    pa.add_argument("--out", dest="outfile", metavar="F")

    ps = sub.add_parser("spectrum", help="scan a rational grid")
    ps.add_argument("--in", dest="infile", required=True, metavar="F")
    ps.add_argument(
        "--grid",
        required=True,
        metavar="RE0,RE1,IM0,IM1,NR,NI",
        help="bounds and point counts per axis",
    )
    ps.add_argument("--set", dest="set_name", default="pbf", choices=SPECTRUM_NAMES)
    ps.add_argument("--out", dest="outfile", metavar="F")
    ps.add_argument("--format", dest="fmt", default="csv", choices=("csv", "json"))

    pd = sub.add_parser("drazin", help="Drazin inverse of a matrix document")
    pd.add_argument("--in", dest="infile", required=True, metavar="F")

    pv = sub.add_parser("verify", help="run randomized property suites")
    pv.add_argument("--suite", default="all", choices=SUITE_NAMES + ("all",))
    pv.add_argument("--cases", type=int, default=200)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument(
        "--corrupt-oracle", action="store_true", help=argparse.SUPPRESS
    )
    return p


def _parse_point(parser: _Parser, text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        parser.error(f"point must be RE,IM, got {text!r}")
    try:
        return parse_rational(parts[0]), parse_rational(parts[1])
    except DocumentError as exc:
        parser.error(str(exc))


def _parse_grid(parser: _Parser, text: str) -> GridSpec:
    parts = text.split(",")
    if len(parts) != 6:
        parser.error(f"grid must be RE0,RE1,IM0,IM1,NR,NI, got {text!r}")
    try:
        re0, re1, im0, im1 = (parse_rational(s) for s in parts[:4])
        nr, ni = int(parts[4]), int(parts[5])
    except (DocumentError, ValueError) as exc:
        parser.error(str(exc))
    try:
        return GridSpec(re0, re1, im0, im1, nr, ni)
    except ValueError as exc:
        parser.error(str(exc))


def _read_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _emit(text: str, outfile: str | None):
    if outfile is None:
        sys.stdout.write(text)
    else:
        with open(outfile, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(parser: _Parser, args) -> int:
    lam = _parse_point(parser, args.lam)
    doc = _read_document(args.infile)
    report = build_report(doc, lam)
    _emit(report.to_json(), args.outfile)
    return 0


def _cmd_spectrum(parser: _Parser, args) -> int:
    grid = _parse_grid(parser, args.grid)
    doc = _read_document(args.infile)
    s = scan(doc.expr, grid)
    if args.fmt == "csv":
        _emit(scan_to_csv(s), args.outfile)
    else:
        _emit(scan_to_json(s, args.set_name), args.outfile)
    return 0


def _cmd_drazin(args) -> int:
    doc = _read_document(args.infile)
    atoms = doc.expr.atoms
    if len(atoms) != 1 or atoms[0].kind != "matrix":
        print("drazin needs a document with a single matrix atom", file=sys.stderr)
        return 4
    dz = drazin_inverse(atoms[0].matrix)
    for i in range(dz.rows):
        print(" ".join(str(dz.at(i, j)) for j in range(dz.cols)))
    return 0


def _cmd_verify(args) -> int:
    text, code = run_suites(args.suite, args.cases, args.seed, args.corrupt_oracle)
    sys.stdout.write(text)
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "analyze":
            return _cmd_analyze(parser, args)
        if args.command == "spectrum":
            return _cmd_spectrum(parser, args)
        if args.command == "drazin":
            return _cmd_drazin(args)
        return _cmd_verify(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedPoint as exc:
        print(f"unsupported point: {exc}", file=sys.stderr)
        return 3


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
