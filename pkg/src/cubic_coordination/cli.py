"""Command-line front end: ``table``, ``series`` and ``verify``."""

import argparse
import json
import re
import sys

from . import lattice, report

FORMATS = ("csv", "json", "pretty")
TRIANGLES = {"s-tri": 0, "d-tri": 1, "c-tri": 2}
SQUARES = {"S": 0, "D": 1, "C": 2}
SERIES_METHODS = ("recurrence", "gf", "jacobi")


def family_parameter(name):
    """Map a table family name to ``(m, triangular)``; raises ``ValueError`` on unknown names."""
    if name in SQUARES:
        return SQUARES[name], False
    if name in TRIANGLES:
        return TRIANGLES[name], True
    match = re.fullmatch(r"L\(?(\d+)\)?", name)
    if match:
        return int(match.group(1)), False
    raise ValueError(f"unknown family {name!r}")


def build_table(name, rows, cols=None):
    m, triangular = family_parameter(name)
    if triangular:
        return [[lattice.lattice_number(m, n - k, k) for k in range(n + 1)] for n in range(rows)]
    cols = rows if cols is None else cols
    return [[lattice.lattice_number(m, n, k) for k in range(cols)] for n in range(rows)]


def format_table(name, table, fmt):
    if fmt == "csv":
        return "".join(",".join(str(v) for v in row) + "\n" for row in table)
    if fmt == "json":
        return json.dumps({"family": name, "rows": report.jsonable(table)}) + "\n"
    if not table:
        return ""
    width = max(len(str(v)) for row in table for v in row)
    _, triangular = family_parameter(name)
    label = max(len(str(len(table) - 1)), 3)
    lines = []
    if not triangular:
        head = " ".join(str(k).rjust(width) for k in range(len(table[0])))
        lines.append("n\\k".rjust(label) + " | " + head)
        lines.append("-" * label + "-+-" + "-" * len(head))
    for n, row in enumerate(table):
        body = " ".join(str(v).rjust(width) for v in row)
        lines.append(str(n).rjust(label) + " | " + body)
    return "\n".join(lines) + "\n"


def build_series(kind, up_to, method="recurrence"):
    if method == "recurrence":
        if kind == "Schroder":
            return lattice.schroder_by_recurrence(up_to)
        return list(lattice.diagonal(kind, up_to).values)
    if method == "gf":
        return lattice.gf_expand(kind, up_to)
    if kind not in lattice.JACOBI_PARAMS:
        raise ValueError(f"no Jacobi representation for {kind!r}")
    return lattice.central_by_jacobi(kind, up_to)


def format_series(kind, values, fmt):
    if fmt == "csv":
        return ",".join(str(v) for v in values) + "\n"
    if fmt == "json":
        return json.dumps({"sequence": kind, "values": report.jsonable(values)}) + "\n"
    return "".join(f"{n:>4}  {v}\n" for n, v in enumerate(values))


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubic-coordination",
        description="Coordination, Delannoy and Schroder numbers of the cubic lattices, with exact verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a table or triangle of lattice numbers")
    table.add_argument("family", help="S, C, D, L(m), s-tri, c-tri or d-tri")
    table.add_argument("rows", type=_nonnegative)
    table.add_argument("cols", type=_nonnegative, nargs="?")
    table.add_argument("--format", choices=FORMATS, default="pretty")

    series = sub.add_parser("series", help="print a central sequence")
    series.add_argument("kind", choices=lattice.KINDS)
    series.add_argument("up_to", type=_nonnegative, help="last index")
    series.add_argument("--method", choices=SERIES_METHODS, default="recurrence")
    series.add_argument("--format", choices=FORMATS, default="csv")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=report.SUITES + ("all",))
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--N", type=_nonnegative, dest="N", help="Hankel order")
    verify.add_argument("--max-n", type=_nonnegative, help="largest polynomial index for the zero suite")
    verify.add_argument("--window", type=_nonnegative, help="matrix window size")
    verify.add_argument("--max-order", type=_nonnegative, help="largest minor order for TP checks")
    verify.add_argument("--smoke", action="store_true", help="reduced parameters")
    verify.add_argument("--no-timing", action="store_true", help="omit timings for byte-identical output")
    verify.add_argument("--seed", type=_seed, default=0)
    return parser


def _verify_params(args):
    return {
        "riordan": {"window": args.window},
        "positivity": {"window": args.window, "max_order": args.max_order},
        "zeros": {"max_n": args.max_n},
        "hankel": {"N": args.N},
    }


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    if args.command == "table":
        try:
            family_parameter(args.family)
        except ValueError as exc:
            parser.error(str(exc))
        out.write(format_table(args.family, build_table(args.family, args.rows, args.cols), args.format))
        return 0
    if args.command == "series":
        try:
            values = build_series(args.kind, args.up_to, args.method)
        except ValueError as exc:
            parser.error(str(exc))
        out.write(format_series(args.kind, values, args.format))
        return 0
    if args.N is not None and args.N < 2:
        parser.error("--N must be at least 2")
    doc = report.run_suite(args.suite, _verify_params(args), seed=args.seed, smoke=args.smoke)
    timing = not args.no_timing
    text = {"json": doc.to_json, "csv": doc.to_csv, "pretty": doc.to_pretty}[args.format](timing)
    out.write(text)
    return 0 if doc.passed else 1


if __name__ == "__main__":
    sys.exit(main())
