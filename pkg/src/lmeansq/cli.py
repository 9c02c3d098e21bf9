"""Command line harness: sweep moduli through the verification suites and
emit tables.

    lmeansq verify theorem3 --k 3..60
    lmeansq table meansq3 --k 3..10 --format csv
    lmeansq chartable 8 --format json

Exit status: 0 when every record passes, 1 when any fails or the output
cannot be written, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .characters import characters, parity
from .lfunc import mean_square_closed, table_rational
from .exact_arith import format_rational
from .multiplicative import euler_phi, jordan_totient
from .records import Tolerance
from .report import build_report, report_csv, timestamp, to_csv, to_json
from .suites import SUITES, run_suite
from .trigsums import csc_power_sum_closed

TABLES = ("jordan", "csc", "meansq3", "meansq4", "charcount")


def parse_k_range(text: str) -> tuple[int, int]:
    """'a..b' or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MIN..MAX, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def default_workers() -> int:
    env = os.environ.get("NT_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _run_one(args):
    suite, k, tol = args
    return run_suite(suite, k, tol)


def sweep(suite: str, k_min: int, k_max: int, tol: Tolerance, workers: int = 1):
    jobs = [(suite, k, tol) for k in range(k_min, k_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        chunks = [_run_one(j) for j in jobs]
    return [rec for chunk in chunks for rec in chunk]


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"lmeansq: cannot write {out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    k_min, k_max = args.k
    if k_min < 3:
        args.parser.error(f"verify needs k_min >= 3, got {k_min}")
    tol = Tolerance(rtol=args.rtol, atol=args.atol)
    records = sweep(args.suite, k_min, k_max, tol, args.workers)
    meta = {
        "tool": "lmeansq",
        "version": __version__,
        "suite": args.suite,
        "k_min": k_min,
        "k_max": k_max,
        "rtol": tol.rtol,
        "atol": tol.atol if tol.atol is not None else f"{tol.atol_per_k!r}*k",
        "timestamp": timestamp(),
    }
    report = build_report(records, meta)
    text = to_json(report) if args.format == "json" else report_csv(report)
    status = _emit(text, args.out)
    s = report["summary"]
    print(f"{args.suite}: {s['passed']}/{s['total']} passed", file=sys.stderr)
    if status:
        return status
    return 0 if s["failed"] == 0 else 1


def table_rows(quantity: str, k_min: int, k_max: int, s: int | None) -> tuple[list[str], list[dict]]:
    rows = []
    if quantity == "jordan":
        s = 1 if s is None else s
        fields = ["k", "s", "J"]
        rows = [{"k": k, "s": s, "J": jordan_totient(s, k)} for k in range(k_min, k_max + 1)]
    elif quantity == "csc":
        fields = ["k", "r", "exact", "value"]
        rs = range(1, 5) if s is None else [s]
        for k in range(k_min, k_max + 1):
            for r in rs:
                v = csc_power_sum_closed(r, k)
                rows.append({"k": k, "r": r, "exact": format_rational(v), "value": float(v)})
    elif quantity in ("meansq3", "meansq4"):
        r = int(quantity[-1])
        fields = ["k", "exact", "value"]
        for k in range(k_min, k_max + 1):
            rows.append(
                {"k": k, "exact": format_rational(table_rational(r, k)), "value": mean_square_closed(r, k)}
            )
    elif quantity == "charcount":
        fields = ["k", "phi", "odd", "even"]
        for k in range(k_min, k_max + 1):
            chars = characters(k)
            odd = sum(parity(c) == "odd" for c in chars)
            rows.append({"k": k, "phi": euler_phi(k), "odd": odd, "even": len(chars) - odd})
    else:
        raise ValueError(quantity)
    return fields, rows


def cmd_table(args) -> int:
    k_min, k_max = args.k
    min_k = 3 if args.quantity in ("csc", "meansq3", "meansq4") else 1
    if k_min < min_k:
        args.parser.error(f"table {args.quantity} needs k_min >= {min_k}, got {k_min}")
    if args.quantity == "csc" and args.s is not None and not 1 <= args.s <= 4:
        args.parser.error("csc tables take --s in 1..4")
    fields, rows = table_rows(args.quantity, k_min, k_max, args.s)
    if args.format == "json":
        text = to_json({"schema": 1, "quantity": args.quantity, "fields": fields, "rows": rows})
    else:
        text = to_csv(rows, fields)
    return _emit(text, args.out)


def character_rows(k: int) -> list[dict]:
    rows = []
    for chi in characters(k):
        vals = [chi.eval(m) for m in range(1, k + 1)]
        rows.append(
            {
                "index": list(chi.index),
                "parity": parity(chi),
                "order": chi.order,
                "values": [None if v.is_zero else str(v) for v in vals],
            }
        )
    return rows


def cmd_chartable(args) -> int:
    if args.k < 1:
        args.parser.error(f"k must be >= 1, got {args.k}")
    rows = character_rows(args.k)
    if args.format == "json":
        text = to_json({"schema": 1, "k": args.k, "phi": euler_phi(args.k), "characters": rows})
    else:
        cols = [f"chi({m})" for m in range(1, args.k + 1)]
        flat = [
            {"index": r["index"], "parity": r["parity"], "order": r["order"], **dict(zip(cols, r["values"]))}
            for r in rows
        ]
        text = to_csv(flat, ["index", "parity", "order", *cols])
    return _emit(text, args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lmeansq", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite over a range of moduli")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--k", type=parse_k_range, required=True, metavar="MIN..MAX")
    v.add_argument("--atol", type=float, default=None, help="fixed absolute tolerance (default 1e-8*k)")
    v.add_argument("--rtol", type=float, default=1e-9)
    v.add_argument("--workers", type=int, default=default_workers(), help="default $NT_WORKERS or CPU count")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None, help="output path (default stdout)")
    v.set_defaults(func=cmd_verify, parser=v)

    t = sub.add_parser("table", help="tabulate a closed-form quantity")
    t.add_argument("quantity", choices=TABLES)
    t.add_argument("--k", type=parse_k_range, required=True, metavar="MIN..MAX")
    t.add_argument("--s", type=int, default=None, help="Jordan index s, or cosecant power r for csc")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_table, parser=t)

    c = sub.add_parser("chartable", help="list the characters mod k")
    c.add_argument("k", type=int)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_chartable, parser=c)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        args.parser.error("--workers must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
