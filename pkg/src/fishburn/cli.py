"""Command-line driver.

Usage:
    fishburn count --structure matchings --avoid 2-nesting --n 4
    fishburn count --structure tables --cdf --n 3 --list
    fishburn verify involution --n-max 8
    fishburn series --equation fishburn --order 6
    fishburn map psi --input "0;0,1"

Every command accepts ``--format plain|json|csv`` and ``--cap``.  Exit code
is 0 when the report status is pass, 1 on fail and 2 on error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import diagrams as dg
from . import matchings as mt
from . import refined as rf
from . import sequences as sq
from . import series as sr
from . import tables as tb
from .errors import FishburnError, PreconditionError
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "run"]

REPORT_SCHEMA = "fishburn-report/1"
EXIT_CODES = {"pass": 0, "fail": 1, "error": 2}
STRUCTURES = ("matchings", "tables", "diagrams", "paired", "ascent", "permutations")
MAPS = ("phi", "phi-inverse", "psi", "psi-tilde", "f", "f-inverse")


def _fmt_seq(seq) -> str:
    return "".join(map(str, seq)) if all(0 <= x <= 9 for x in seq) else ",".join(map(str, seq))


def _count(args) -> dict:
    s, n, d = args.structure, args.n, args.d
    if s != "matchings" and args.avoid:
        raise PreconditionError("--avoid only applies to --structure matchings")
    if s != "tables" and args.cdf:
        raise PreconditionError("--cdf only applies to --structure tables")
    if args.fixed and s not in ("diagrams", "paired"):
        raise PreconditionError("--fixed only applies to diagrams and paired")
    if d is not None and s in ("matchings", "permutations"):
        raise PreconditionError(f"--d does not apply to {s}")

    if s == "matchings":
        kinds = [mt.NestingKind.parse(a) for a in args.avoid]
        items = (
            x for x in mt.enumerate_matchings(n, cap=args.cap)
            if not any(mt.has_nesting(x, k) for k in kinds)
        )
    elif s == "tables":
        if args.cdf:
            items = tb.enumerate_T(n, d, cap=args.cap)
        else:
            items = (
                t for t in tb.enumerate_inversion_tables(n, cap=args.cap)
                if d is None or tb.d_statistic(t) == d
            )
    elif s == "diagrams":
        items = dg.enumerate_Y(n, d, cap=args.cap)
        if args.fixed:
            items = (a for a in items if dg.is_fixed(a))
    elif s == "paired":
        if d is None:
            raise PreconditionError("--structure paired requires --d")
        items = rf.enumerate_Y_tilde(n, d, cap=args.cap)
        if args.fixed:
            items = (p for p in items if rf.is_fixed_tilde(p))
    elif s == "ascent":
        items = (
            _fmt_seq(x) for x in sq.enumerate_ascent_sequences(n, cap=args.cap)
            if d is None or sq.zeros_statistic(x) == d
        )
    else:
        items = (_fmt_seq(p) for p in sq.enumerate_avoiding_permutations(n, cap=args.cap))

    listing = [str(x) for x in items]
    results: dict = {"count": len(listing)}
    if args.list:
        results["items"] = listing
    return results


def _verify(args) -> dict:
    records = run_suite(args.suite, args.n_max, cap=args.cap)
    failures = [r for r in records if not r["ok"]]
    return {"checks": records, "failures": len(failures)}


def _series(args) -> dict:
    try:
        build = sr.SERIES[args.equation]
    except KeyError:
        raise PreconditionError(
            f"unknown equation {args.equation!r}; choose from {', '.join(sr.SERIES)}"
        ) from None
    poly = build(args.order)
    return {"order": args.order, "polynomial": str(poly), "coefficients": poly.to_json_dict()}


def _map(args) -> dict:
    name = args.map_name.replace("_", "-")
    text = args.input
    if name == "phi":
        out = tb.phi(mt.Matching.parse(text))
    elif name == "phi-inverse":
        out = tb.phi_inverse(tb.InversionTable.parse(text))
    elif name == "psi":
        out = dg.psi(dg.FishburnDiagram.parse(text))
    elif name == "psi-tilde":
        out = rf.psi_tilde(rf.PairedDiagram.parse(text))
    elif name in ("f", "embed-f"):
        out = rf.embed_f(rf.PairedDiagram.parse(text))
    elif name == "f-inverse":
        out = rf.f_inverse(dg.FishburnDiagram.parse(text))
    else:
        raise PreconditionError(f"unknown map {args.map_name!r}; choose from {', '.join(MAPS)}")
    return {"input": text, "output": str(out)}


_COMMANDS = {"count": _count, "verify": _verify, "series": _series, "map": _map}


def build_parser() -> argparse.ArgumentParser:
    def add_globals(p, default_format, default_cap):
        p.add_argument("--format", choices=("plain", "json", "csv"), default=default_format)
        p.add_argument(
            "--cap", type=int, default=default_cap,
            help="enumeration cap (default 2027025, or $FISHBURN_CAP)",
        )

    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Enumerate and verify Fishburn-number structures exactly.",
    )
    add_globals(parser, "plain", None)
    # subcommand copies must not clobber values given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, argparse.SUPPRESS, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count (and list) a family")
    p.add_argument("--structure", required=True, choices=STRUCTURES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None,
                   help="d-statistic (tables, diagrams, paired) or number of zeros (ascent)")
    p.add_argument("--avoid", action="append", default=[],
                   help="nesting kind to exclude: nesting, left, right, neighbor, <k>-nesting")
    p.add_argument("--cdf", action="store_true", help="tables: no a_p = a_q + 1 with p < q")
    p.add_argument("--fixed", action="store_true", help="diagrams/paired: fixed points only")
    p.add_argument("--list", action="store_true", help="also emit every object")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive property suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument("--equation", required=True, help=", ".join(sr.SERIES))
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("map", parents=[common], help="apply one of the bijections")
    p.add_argument("map_name", help=", ".join(MAPS))
    p.add_argument("--input", required=True)
    return parser


def run(args: argparse.Namespace) -> dict:
    """Execute a parsed command and return its report."""
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    start = time.perf_counter()
    try:
        results = _COMMANDS[args.command](args)
        status = "fail" if results.get("failures") else "pass"
    except FishburnError as exc:
        results, status = {"error": str(exc)}, "error"
    return {
        "schema": REPORT_SCHEMA,
        "command": args.command,
        "parameters": params,
        "results": results,
        "status": status,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    res, cmd = report["results"], report["command"]
    if report["status"] == "error":
        if fmt == "csv":
            return _csv([["status", "error"], ["error", res["error"]]])
        return f"error: {res['error']}"
    if fmt == "csv":
        if cmd == "count":
            rows = [["count", res["count"]]]
            if "items" in res:
                rows = [["index", "item"]] + [[i, x] for i, x in enumerate(res["items"], 1)]
            return _csv(rows)
        if cmd == "verify":
            rows = [["n", "d", "check", "expected", "observed", "ok"]]
            for r in res["checks"]:
                rows.append([r["n"], r.get("d", ""), r["check"],
                             json.dumps(r["expected"]), json.dumps(r["observed"]), r["ok"]])
            return _csv(rows)
        if cmd == "series":
            rows = [["t_degree", "z_degree", "coefficient"]]
            for key, c in res["coefficients"].items():
                t_part, z_part = key.split()
                rows.append([t_part[2:], z_part[2:], c])
            return _csv(rows)
        return _csv([["input", "output"], [res["input"], res["output"]]])
    # plain
    if cmd == "count":
        return "\n".join(res.get("items", []) + [str(res["count"])])
    if cmd == "verify":
        lines = []
        for r in res["checks"]:
            where = f"n={r['n']}" + (f" d={r['d']}" if "d" in r else "")
            mark = "ok  " if r["ok"] else "FAIL"
            lines.append(f"{mark} {where:<10} {r['check']}: expected {r['expected']}, got {r['observed']}")
        lines.append(f"{report['status']}: {len(res['checks']) - res['failures']}/{len(res['checks'])} checks")
        return "\n".join(lines)
    if cmd == "series":
        return json.dumps(res["coefficients"])
    return res["output"]


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = run(args)
    out = render(report, args.format)
    stream = sys.stderr if report["status"] == "error" and args.format == "plain" else sys.stdout
    print(out, file=stream)
    return EXIT_CODES[report["status"]]


if __name__ == "__main__":
    sys.exit(main())
