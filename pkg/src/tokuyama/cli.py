"""Command-line front end.

Exit codes: 0 success (all identities hold), 1 identity mismatch,
2 usage or validation error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .characters import schur, sweep, verify_identity
from .crystal import DEFAULT_CAP, CapExceeded, export_graph
from .laurent import LaurentPoly, UniPoly
from .statistics import StatVector, decorations, statistic_record
from .tableaux import NotSemistandardError, Tableau, dimension, enumerate_ssyt, partition_from_weight

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(chunk) for chunk in text.replace(" ", "").split(",") if chunk != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _weight_arg(args: argparse.Namespace) -> tuple[int, ...]:
    weight = args.weight
    if weight is None:
        raise UsageError("--lambda is required")
    if weight == (0,) and args.rank and args.rank > 1:
        weight = (0,) * args.rank
    if args.rank is not None and len(weight) != args.rank:
        raise UsageError(f"--lambda has {len(weight)} coefficients but rank is {args.rank}")
    if any(a < 0 for a in weight):
        raise UsageError("--lambda coefficients must be non-negative")
    return weight


def cmd_verify(args: argparse.Namespace) -> int:
    if args.sweep:
        cases = list(sweep(args.max_rank, args.max_level))
    else:
        weight = _weight_arg(args)
        cases = [(len(weight), weight)]

    reports = [verify_identity(weight, r, shards=args.shards) for r, weight in cases]
    dicts = []
    for report in reports:
        data = report.to_dict()
        if not args.timing:
            data.pop("seconds")
        dicts.append(data)

    if args.format == "json":
        text = "".join(json.dumps(d) + "\n" for d in dicts)
    elif args.format == "csv":
        text = _csv_text(
            ["rank", "lambda", "shape", "tableaux", "lhs_terms", "rhs_terms", "equal", "mismatches"],
            [
                [
                    r.rank,
                    " ".join(map(str, r.weight)),
                    " ".join(map(str, r.shape)),
                    r.tableau_count,
                    r.lhs_terms,
                    r.rhs_terms,
                    r.equal,
                    len(r.mismatches),
                ]
                for r in reports
            ],
        )
    else:
        lines = []
        for r in reports:
            status = "equal" if r.equal else f"MISMATCH ({len(r.mismatches)} terms)"
            line = (
                f"r={r.rank} lambda={','.join(map(str, r.weight))} shape={','.join(map(str, r.shape))} "
                f"tableaux={r.tableau_count} terms={r.lhs_terms}/{r.rhs_terms} {status}"
            )
            if args.timing:
                line += f" {r.seconds:.3f}s"
            lines.append(line)
            for exp, left, right in r.mismatches:
                lines.append(f"    z^{list(exp)}: lhs {list(left)} rhs {list(right)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if all(r.equal for r in reports) else EXIT_MISMATCH


def _read_tableau(spec: str) -> Tableau:
    path = Path(spec)
    if path.suffix == ".json" or (len(spec) < 4096 and path.is_file()):
        spec = path.read_text(encoding="utf-8")
    spec = spec.strip()
    if spec.startswith("{"):
        return Tableau.from_json(spec)
    return Tableau.from_string(spec)


def _format_record_text(tableau: Tableau, record: dict) -> str:
    dec = decorations(tableau)
    b = StatVector(tableau.rank, tuple(record["b"]))
    lines = [str(tableau), ""]
    lines.append(f"content      {tuple(record['content'])}")
    lines.append(f"a(T)         {dec.base}")
    lines.append(f"b(T)         {b}")
    lines.append(f"circled      {dec.circled_positions()}")
    lines.append(f"boxed        {dec.boxed_positions()}")
    lines.append(f"seg          {record['seg']}")
    lines.append(f"flush        {record['flush']}")
    lines.append(f"gapless      {record['gapless']}")
    lines.append(f"coefficient  {UniPoly(tuple(record['coefficient']['coeffs_in_t']))}")
    return "\n".join(lines) + "\n"


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        tableau = _read_tableau(args.tableau)
    except NotSemistandardError as exc:
        cell = f" at cell {exc.cell}" if exc.cell else ""
        raise UsageError(f"invalid tableau{cell}: {exc}") from None
    except (ValueError, KeyError) as exc:
        raise UsageError(f"could not parse tableau: {exc}") from None
    try:
        record = statistic_record(tableau)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.format == "json":
        text = json.dumps(record) + "\n"
    elif args.format == "csv":
        keys = list(record)
        flat = [
            json.dumps(record[k]["coeffs_in_t"]) if k == "coefficient" else json.dumps(record[k])
            for k in keys
        ]
        text = _csv_text(keys, [flat])
    else:
        text = _format_record_text(tableau, record)
    _emit(text, args.output)
    return EXIT_OK


def _check_cap(shape: Sequence[int], n: int, cap: int) -> None:
    size = dimension(shape, n)
    if size > cap:
        raise CapExceeded(size, cap)


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = args.shape
    n = args.n if args.n is not None else len(shape) + 1
    if any(b > a for a, b in zip(shape, shape[1:])) or any(p <= 0 for p in shape):
        raise UsageError(f"shape {shape} is not a partition with positive parts")
    if n < len(shape):
        raise UsageError(f"no tableau of a {len(shape)}-row shape has entries <= {n}")
    _check_cap(shape, n, args.cap)
    tableaux = list(enumerate_ssyt(shape, n))
    if args.format == "json":
        text = "".join(json.dumps(t.to_dict()) + "\n" for t in tableaux)
    elif args.format == "csv":
        text = _csv_text(["index", "rows"], [[k, t.key()] for k, t in enumerate(tableaux)])
    else:
        text = "\n\n".join(str(t) for t in tableaux) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_schur(args: argparse.Namespace) -> int:
    if args.partition is not None:
        partition = args.partition
        if args.n is None:
            raise UsageError("-n is required with --partition")
        n = args.n
    else:
        weight = _weight_arg(args)
        partition = partition_from_weight(weight)
        n = args.n if args.n is not None else len(weight) + 1
    try:
        poly: LaurentPoly = schur(partition, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = poly.to_json() + "\n"
    else:
        text = str(poly) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    shape = args.shape
    r = args.rank if args.rank is not None else len(shape)
    if any(b > a for a, b in zip(shape, shape[1:])) or any(p <= 0 for p in shape):
        raise UsageError(f"shape {shape} is not a partition with positive parts")
    if r + 1 < len(shape):
        raise UsageError(f"rank {r} is too small for a {len(shape)}-row shape")
    _emit(export_graph(shape, r, fmt=args.format, cap=args.cap), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokuyama",
        description="Segment and flush statistics on tableaux, and the tableau Tokuyama identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def weight_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("-r", "--rank", type=int, help="rank r (alphabet 1..r+1)")
        p.add_argument(
            "--lambda",
            dest="weight",
            type=_int_list,
            help="dominant weight as fundamental-weight coefficients a_1,...,a_r (a single 0 means lambda = 0)",
        )

    def output_option(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("verify", help="check both sides of the identity term by term")
    weight_options(p)
    p.add_argument("--sweep", action="store_true", help="run every (r, lambda) within the bounds below")
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-level", type=int, default=2, help="largest sum of lambda coefficients in a sweep")
    p.add_argument("--shards", type=int, default=1, help="worker processes for the tableau sum")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds (output is then not reproducible)")
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    output_option(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("stats", help="all statistics of one tableau")
    p.add_argument(
        "tableau",
        help='tableau as JSON ({"rows": [[...], ...]}), as "1 1 2 / 2 3", or a path to a JSON file',
    )
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    output_option(p)
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("enumerate", help="list semistandard tableaux of a shape")
    p.add_argument("--shape", type=_int_list, required=True)
    p.add_argument("-n", type=int, help="largest entry (default: rows + 1)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    output_option(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("schur", help="Schur polynomial as a sum over tableaux")
    weight_options(p)
    p.add_argument("--partition", type=_int_list)
    p.add_argument("-n", type=int, help="number of variables")
    p.add_argument("--format", choices=["json", "text"], default="text")
    output_option(p)
    p.set_defaults(handler=cmd_schur)

    p = sub.add_parser("graph", help="export a crystal graph")
    p.add_argument("--shape", type=_int_list, required=True)
    p.add_argument("-r", "--rank", type=int, help="rank r (default: number of rows)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    output_option(p)
    p.set_defaults(handler=cmd_graph)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"{parser.prog} {args.command}: refused: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
