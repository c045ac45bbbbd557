"""Command-line front end.

Subcommands: ``poly`` (Kauffman polynomials of a pretzel), ``grid``
(emit and verify an arc presentation), ``bounds`` (arc-index bounds,
sweeps, and the survey tables).  Exit codes: 0 success, 2 usage or
parse error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import bracket as bracket_mod
from .grid import grid_to_json, grid_to_text, render_ascii, validate
from .pretzel import FamilySpec, parse_pretzel, standard_writhe
from .skein import kauffman_F, lambda_n

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3

VERIFY_CROSSING_BUDGET = 16  # oracle on by default up to this c(K)


def _parse_range(text: str) -> range:
    """Either a single integer or an inclusive 'lo..hi' range."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _family_from_args(args) -> FamilySpec:
    return FamilySpec(args.p, args.q, args.r)


def cmd_poly(args) -> int:
    try:
        spec = parse_pretzel(args.spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lam = lambda_n(spec)
    F = kauffman_F(spec)
    summary = F.summarize()
    if args.format == "json":
        print(
            json.dumps(
                {
                    "spec": str(spec),
                    "writhe": standard_writhe(spec),
                    "lambda": lam.to_json_terms(),
                    "kauffman": F.to_json_terms(),
                    "spread_a": F.spread_a(),
                    "summary": {
                        "max_a": summary.max_a,
                        "top_coeff": summary.top_coeff,
                        "top_zpow": summary.top_zpow,
                        "min_a": summary.min_a,
                        "bot_coeff": summary.bot_coeff,
                        "bot_zpow": summary.bot_zpow,
                    },
                }
            )
        )
    else:
        print(f"spec:    {spec}")
        if spec.n > 3:
            print("engine:  extended (more than three bands)")
        print(f"writhe:  {standard_writhe(spec)}")
        print(f"Lambda:  {lam.to_text()}")
        print(f"F:       {F.to_text()}")
        print(f"spread:  {F.spread_a()}")
        print(f"summary: {summary.bracket_notation()}")
    return EXIT_OK


def cmd_grid(args) -> int:
    try:
        family = _family_from_args(args)
        g = bounds_mod.build_grid(family)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    bad = validate(g)
    status = "PASS" if not bad else "FAIL"
    verified = None
    if not bad and not args.no_verify and family.crossing_number() <= VERIFY_CROSSING_BUDGET:
        expected = bracket_mod.jones_from_F(kauffman_F(family.to_pretzel()))
        try:
            got = bracket_mod.jones(g, args.max_crossings)
        except ValueError as exc:
            print(f"verification skipped: {exc}", file=sys.stderr)
            got = None
        if got is not None:
            verified = got == expected
            if not verified:
                status = "FAIL"

    if args.format == "json":
        print(
            json.dumps(
                {
                    "family": str(family),
                    "grid": json.loads(grid_to_json(g)),
                    "violations": bad,
                    "verified": verified,
                    "status": status,
                }
            )
        )
    else:
        print(grid_to_text(g), end="")
        print(render_ascii(g))
        if verified is None:
            print(f"size {g.size}, validation {status} (oracle not run)")
        else:
            print(f"size {g.size}, validation+oracle {status}")
    if status != "PASS":
        return EXIT_VERIFY
    return EXIT_OK


def _print_rows(rows, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(bounds_mod.rows_to_json_objs(rows)))
    elif fmt == "tsv":
        print(bounds_mod.rows_to_tsv(rows), end="")
    else:
        tsv = bounds_mod.rows_to_tsv(rows)
        for line in tsv.splitlines():
            print("  ".join(f"{cell:>12}" for cell in line.split("\t")))


def cmd_bounds(args) -> int:
    if args.table is not None:
        rows = bounds_mod.make_table(args.table)
        _print_rows(rows, args.format)
        return EXIT_OK
    if args.p is None or args.q is None or args.r is None:
        print("error: need -p, -q, -r (or --table)", file=sys.stderr)
        return EXIT_USAGE
    try:
        ps, qs, rs = _parse_range(args.p), _parse_range(args.q), _parse_range(args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    single = all(len(rng) == 1 for rng in (ps, qs, rs))
    if single:
        try:
            family = FamilySpec(ps[0], qs[0], rs[0])
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        report = bounds_mod.verdict(family)
        if args.format == "json":
            print(json.dumps(bounds_mod.rows_to_json_objs([report])[0]))
        elif args.format == "tsv":
            print(bounds_mod.rows_to_tsv([report]), end="")
        else:
            c = report.crossing_number
            rel = {0: "c(K)", 1: "c(K)-1", 2: "c(K)-2", 3: "c(K)-3"}
            hi = min(report.upper_construction, report.upper_cminus)
            tag = rel.get(c - hi)
            suffix = f" = {tag}" if tag and report.verdict.is_exact else ""
            print(f"{report.family}: {report.verdict}{suffix}")
            print(
                f"  c(K) = {c}, spread_a(F) = {report.spread}, "
                f"lower = {report.lower}, upper: construction {report.upper_construction}, "
                f"crossing bound {report.upper_cminus}"
            )
        return EXIT_OK
    reports, errors = bounds_mod.sweep(ps, qs, rs)
    _print_rows(reports, args.format)
    for name, msg in errors:
        print(f"skipped {name}: {msg}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pretzelarc",
        description="Kauffman polynomials, arc presentations, and arc-index "
        "bounds for pretzel links",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="compute Lambda, F, spread, summary")
    p_poly.add_argument("spec", help='pretzel notation, e.g. "P(-2,3,3)"')
    p_poly.add_argument("--format", choices=("text", "json"), default="text")
    p_poly.set_defaults(func=cmd_poly)

    p_grid = sub.add_parser("grid", help="emit an arc presentation as a grid")
    p_grid.add_argument("-p", type=int, required=True)
    p_grid.add_argument("-q", type=int, required=True)
    p_grid.add_argument("-r", type=int, required=True)
    p_grid.add_argument("--format", choices=("text", "json"), default="text")
    p_grid.add_argument("--no-verify", action="store_true")
    p_grid.add_argument(
        "--max-crossings", type=int, default=bracket_mod.DEFAULT_MAX_CROSSINGS
    )
    p_grid.set_defaults(func=cmd_grid)

    p_bounds = sub.add_parser("bounds", help="arc-index bounds and tables")
    p_bounds.add_argument("-p")
    p_bounds.add_argument("-q")
    p_bounds.add_argument("-r")
    p_bounds.add_argument("--table", type=int, choices=(1, 2))
    p_bounds.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p_bounds.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
