"""Command line interface.

Exit status is 0 on success, 1 for bad input and 2 when an internal
consistency check fails. Errors go to stderr as ``error[Code]: message``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InconsistencyError, InputError, PersteenrodError
from .io import (
    barcode_to_json,
    barcode_to_svg,
    barcode_to_text,
    format_cochain,
    format_complex,
    parse_cochain_file,
    parse_complex_file,
    parse_points_csv,
)
from .persistence import NEG_INF, persistent_cohomology
from .rank_invariant import RankInvariant, RankQuery
from .rips import RipsConfig, rips_filtration
from .selfcheck import run_selfcheck
from .steenrod import stsq


class _UsageError(InputError):
    code = "Usage"


class _IOFailure(InputError):
    code = "IOError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"error[Usage]: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"{path}: {exc.strerror}") from None


def _stage(text: str) -> float:
    if text in ("-inf", "-infinity"):
        return NEG_INF
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"stage must be an integer or -inf, got {text!r}") from None


def cmd_barcode(args) -> int:
    X = parse_complex_file(_read(args.complex))
    bc = persistent_cohomology(X).barcode
    if args.svg:
        Path(args.svg).write_text(barcode_to_svg(bc, X.n), encoding="utf-8")
    if args.json:
        sys.stdout.write(barcode_to_json(bc))
    elif not args.svg:
        sys.stdout.write(barcode_to_text(bc))
    return 0


def cmd_stsq(args) -> int:
    X = parse_complex_file(_read(args.complex))
    alpha = parse_cochain_file(_read(args.cochain), X, args.degree)
    out = stsq(args.k, alpha, X)
    if args.json:
        doc = {"degree": out.degree, "simplices": [list(s) for s in out.sorted_in(X)]}
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        sys.stdout.write(format_cochain(out, X))
    return 0


def cmd_rankinv(args) -> int:
    X = parse_complex_file(_read(args.complex))
    ri = RankInvariant(X)
    if args.table:
        table = ri.table(args.k, args.d)
        if args.json:
            rows = [
                {"i": "-inf" if i == NEG_INF else i, "j": j, "rank": r}
                for (i, j), r in sorted(table.values.items())
            ]
            sys.stdout.write(json.dumps({"k": args.k, "d": args.d, "table": rows}) + "\n")
        else:
            sys.stdout.write(table.to_csv())
        return 0
    if args.i is None or args.j is None:
        raise _UsageError("give both -i and -j, or --table")
    i, j = _stage(args.i), _stage(args.j)
    if j == NEG_INF:
        raise _UsageError("j must be a finite stage")
    r = ri.rank(RankQuery(args.k, args.d, i, j))
    if args.json:
        doc = {"k": args.k, "d": args.d, "i": "-inf" if i == NEG_INF else i, "j": j, "rank": r}
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        sys.stdout.write(f"{r}\n")
    return 0


def cmd_rips(args) -> int:
    points = parse_points_csv(_read(args.points))
    X = rips_filtration(points, RipsConfig(args.threshold, args.max_dim))
    Path(args.out).write_text(format_complex(X), encoding="utf-8")
    return 0


def cmd_selfcheck(args) -> int:
    X = parse_complex_file(_read(args.complex))
    results = run_selfcheck(X, seed=args.seed, trials=args.trials, windows=args.windows)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="persteenrod",
        description="Persistent cohomology barcodes and Steenrod-square rank invariants over F2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("barcode", help="barcode of a filtered complex")
    p.add_argument("complex")
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="OUT")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("stsq", help="cochain representative of Sq^k")
    p.add_argument("complex")
    p.add_argument("cochain")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--degree", type=int, help="degree of the cochain (required if it is empty)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stsq)

    p = sub.add_parser("rankinv", help="Steenrod rank invariant rho(k, d, i, j)")
    p.add_argument("complex")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-i")
    p.add_argument("-j")
    p.add_argument("--table", action="store_true", help="CSV i,j,rank over every window")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rankinv)

    p = sub.add_parser("rips", help="Vietoris-Rips filtration of a CSV point cloud")
    p.add_argument("points")
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_rips)

    p = sub.add_parser("selfcheck", help="compare against the brute-force oracles")
    p.add_argument("complex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--windows", type=int, default=300)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def _join_negative_stages(argv: list[str]) -> list[str]:
    # argparse would read "-inf" as an option flag
    out: list[str] = []
    for token in argv:
        if out and out[-1] in ("-i", "-j") and token.startswith("-inf"):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_stages(argv))
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except PersteenrodError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
