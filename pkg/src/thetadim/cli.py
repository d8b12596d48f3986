"""Command-line front end.

Four subcommands: `dim` (single dimension lookup), `check` (identity sweep
over a parameter grid), `table` (the s(n, 0, k) matrix at fixed genus) and
`factor` (symbolic theta-bundle factorizations).  Integer values are always
emitted as decimal strings, never floating point, so arbitrarily large
dimensions survive the trip through JSON.

Exit codes: 0 success, 1 check failure, 2 unsupported input, 3
certification failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .checks import CHECK_NAMES, CheckReport, GridBounds, grid_sweep
from .intervals import DEFAULT_MAX_PRECISION_BITS, CertificationError
from .theta import (
    DegreeMismatch,
    FormalLineClass,
    NonIntegralExponent,
    NotAMultiple,
    ThetaDescriptor,
    complementary_invariants,
    jacobian_pullback,
    pullback_split,
    theta_rescale,
)
from .verlinde import UnsupportedQuery, VerlindeQuery, gl_dim, sl_dim

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_UNSUPPORTED = 2
EXIT_CERTIFICATION = 3
EXIT_USAGE = 64


@dataclass(frozen=True)
class OutputRecord:
    """Machine-readable echo of one dimension query and its result."""

    kind: str
    genus: int
    rank: int
    degree: int
    level: int
    value: str
    method: str
    certified: bool

    def to_dict(self) -> dict:
        return {
            "query": {
                "genus": self.genus,
                "rank": self.rank,
                "degree": self.degree,
                "level": self.level,
                "kind": self.kind,
            },
            "value": self.value,
            "method": self.method,
            "certified": self.certified,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "OutputRecord":
        query = payload["query"]
        return cls(
            kind=query["kind"],
            genus=query["genus"],
            rank=query["rank"],
            degree=query["degree"],
            level=query["level"],
            value=payload["value"],
            method=payload["method"],
            certified=payload["certified"],
        )


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional 64 exit status for usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _genus_range(text: str) -> tuple[int, int]:
    try:
        first, _, last = text.partition("..")
        lo, hi = int(first), int(last)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if lo < 1:
        raise argparse.ArgumentTypeError("genus range must start at 1 or above")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thetadim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    dim = sub.add_parser("dim", parents=[], help="one dimension value")
    dim.add_argument("kind", choices=("sl", "gl"))
    dim.add_argument("--genus", "-g", type=int, required=True)
    dim.add_argument("--rank", "-n", type=int, required=True)
    dim.add_argument("--degree", "-d", type=int, required=True)
    dim.add_argument("--level", "-k", type=int, required=True)
    dim.add_argument("--format", choices=("text", "json"), default="text")
    dim.add_argument("--max-precision-bits", type=int, default=DEFAULT_MAX_PRECISION_BITS)
    dim.set_defaults(handler=_cmd_dim)

    check = sub.add_parser("check", help="sweep one identity over a grid")
    check.add_argument("name", choices=CHECK_NAMES)
    check.add_argument("--max-rank", type=int, default=3)
    check.add_argument("--max-level", type=int, default=3)
    check.add_argument("--genus-range", type=_genus_range, default=(1, 3), metavar="A..B")
    check.add_argument("--max-abs-degree", type=int, default=3)
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--max-precision-bits", type=int, default=DEFAULT_MAX_PRECISION_BITS)
    check.add_argument(
        "--negative-control",
        action="store_true",
        help="perturb one side of every comparison; failures are then expected",
    )
    check.set_defaults(handler=_cmd_check)

    table = sub.add_parser("table", help="matrix of s(n, 0, k) at fixed genus")
    table.add_argument("--genus", "-g", type=int, required=True)
    table.add_argument("--max-rank", type=int, default=4)
    table.add_argument("--max-level", type=int, default=4)
    table.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    table.add_argument("--max-precision-bits", type=int, default=DEFAULT_MAX_PRECISION_BITS)
    table.set_defaults(handler=_cmd_table)

    factor = sub.add_parser("factor", help="symbolic theta-bundle factorizations")
    factor.add_argument("subject", choices=("pullback", "rescale", "jacobian"))
    factor.add_argument("--n1", type=int)
    factor.add_argument("--d1", type=int)
    factor.add_argument("--n2", type=int)
    factor.add_argument("--rkF", type=int)
    factor.add_argument("--rkF0", type=int)
    factor.add_argument("--genus", "-g", type=int)
    factor.add_argument("--rank", "-n", type=int)
    factor.add_argument("--degree", "-d", type=int)
    factor.set_defaults(handler=_cmd_factor)

    return parser


def _cmd_dim(args) -> int:
    try:
        query = VerlindeQuery(args.genus, args.rank, args.degree, args.level)
    except ValueError as exc:
        print(f"thetadim dim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    compute = sl_dim if args.kind == "sl" else gl_dim
    result = compute(query, max_precision_bits=args.max_precision_bits)
    record = OutputRecord(
        kind=args.kind,
        genus=args.genus,
        rank=args.rank,
        degree=args.degree,
        level=args.level,
        value=str(result.value),
        method=result.method,
        certified=result.certified,
    )
    if args.format == "json":
        print(json.dumps(record.to_dict()))
    else:
        print(record.value)
    return EXIT_OK


def _render_report_text(report: CheckReport) -> str:
    lines = [
        f"check {report.check_name}: {report.instances_run} instances, "
        f"{report.skipped_unsupported} skipped (unsupported), "
        f"{len(report.failures)} failures: {report.status.upper()}"
    ]
    for failure in report.failures:
        g, n, d, k = failure.inputs
        lines.append(f"  (g={g}, n={n}, d={d}, k={k}): lhs={failure.lhs} rhs={failure.rhs}")
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines)


def _cmd_check(args) -> int:
    lo, hi = args.genus_range
    try:
        bounds = GridBounds(
            max_rank=args.max_rank,
            max_level=args.max_level,
            genus_min=lo,
            genus_max=hi,
            max_abs_degree=args.max_abs_degree,
        )
    except ValueError as exc:
        print(f"thetadim check: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = grid_sweep(
        args.name,
        bounds,
        max_precision_bits=args.max_precision_bits,
        negative_control=args.negative_control,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(_render_report_text(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_table(args) -> int:
    if args.genus < 1 or args.max_rank < 1 or args.max_level < 1:
        print("thetadim table: error: genus and bounds must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for n in range(1, args.max_rank + 1):
        values = [
            str(
                sl_dim(
                    VerlindeQuery(args.genus, n, 0, k),
                    max_precision_bits=args.max_precision_bits,
                ).value
            )
            for k in range(1, args.max_level + 1)
        ]
        rows.append((n, values))

    header = ["n\\k"] + [str(k) for k in range(1, args.max_level + 1)]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "genus": args.genus,
                    "max_rank": args.max_rank,
                    "max_level": args.max_level,
                    "rows": [{"rank": n, "values": values} for n, values in rows],
                }
            )
        )
    elif args.format == "md":
        print("| " + " | ".join(header) + " |")
        print("|" + "---|" * len(header))
        for n, values in rows:
            print("| " + " | ".join([str(n)] + values) + " |")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        for n, values in rows:
            writer.writerow([str(n)] + values)
    return EXIT_OK


def _require(args, names: list[str]) -> bool:
    missing = [f"--{name}" for name in names if getattr(args, name.replace("-", "_")) is None]
    if missing:
        print(
            f"thetadim factor {args.subject}: error: missing {' '.join(missing)}",
            file=sys.stderr,
        )
        return False
    return True


def _cmd_factor(args) -> int:
    if args.subject == "pullback":
        if not _require(args, ["n1", "d1", "n2", "rkF"]):
            return EXIT_USAGE
        F = ThetaDescriptor(args.rkF, FormalLineClass.symbol("detF"))
        L1 = FormalLineClass.symbol("L1", degree=args.d1)
        fact = pullback_split(args.n1, args.d1, args.n2, F, L1)
        det = fact.right_descriptor.det.format(explicit_exponents=True)
        print(f"theta^{fact.left_exponent} [x] theta{{rank={fact.right_descriptor.rank}, det={det}}}")
    elif args.subject == "rescale":
        if not _require(args, ["rkF", "rkF0"]):
            return EXIT_USAGE
        F = ThetaDescriptor(args.rkF, FormalLineClass.symbol("detF"))
        F0 = ThetaDescriptor(args.rkF0, FormalLineClass.symbol("detF0"))
        a, twist = theta_rescale(F, F0)
        print(f"a={a}, twist={twist.format(explicit_exponents=True)}")
    else:  # jacobian
        if not _require(args, ["genus", "rank", "degree"]):
            return EXIT_USAGE
        g, n, d = args.genus, args.rank, args.degree
        if g < 1 or n < 1:
            print("thetadim factor jacobian: error: genus and rank must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        _, d_F = complementary_invariants(g, n, d, 1)
        L = FormalLineClass.symbol("L", degree=d)
        detF = FormalLineClass.symbol("detF", degree=d_F)
        exponent, equation = jacobian_pullback(g, n, d, L, detF)
        print(
            f"exponent {exponent}, constraint {equation}, "
            f"degree check {n * (g - 1)} = {equation.rhs.degree}"
        )
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except UnsupportedQuery as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (NotAMultiple, NonIntegralExponent, DegreeMismatch) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
