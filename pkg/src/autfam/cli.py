"""Command line front end.

Every subcommand is a batch job: it parses a parameter grid, evaluates each
cell with a pure function (optionally in worker processes, reduced in input
order) and writes CSV or JSON.  Exact rationals are printed as ``num/den``
unless ``--decimal d`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import mpmath

from . import acceptance, arith
from . import bruhat_tits as bt
from . import families, finite_lie, local_reps, plancherel
from .eichler_selberg import TraceQuery, dim_cusp, dim_new, trace_hecke, trace_new

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------- parsing


def int_list(text: str) -> list[int]:
    """``"2,4,10-20:2"`` -> [2, 4, 10, 12, ..., 20]."""
    out = []
    for item in text.split(","):
        item = item.strip()
        step = 1
        if ":" in item:
            item, st = item.split(":")
            step = int(st)
            if step < 1:
                raise argparse.ArgumentTypeError(f"bad step in {text!r}")
        if "-" in item:
            lo, hi = item.split("-")
            out.extend(range(int(lo), int(hi) + 1, step))
        else:
            out.append(int(item))
    if not out:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return out


def _int_list_arg(text: str) -> list[int]:
    try:
        return int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from exc


# --------------------------------------------------------------------------- rendering


class Renderer:
    def __init__(self, decimal: int | None):
        self.decimal = decimal

    def __call__(self, x) -> str:
        if self.decimal is not None:
            if isinstance(x, Fraction) and x.denominator != 1:
                with mpmath.workdps(self.decimal + 5):
                    return mpmath.nstr(mpmath.mpf(x.numerator) / x.denominator, self.decimal)
            if isinstance(x, bt.HalfPower):
                with mpmath.workdps(self.decimal + 5):
                    v = mpmath.mpf(x.r.numerator) / x.r.denominator * mpmath.sqrt(x.p) ** x.k
                    return mpmath.nstr(v, self.decimal)
        return acceptance.fmt(x)

    def json_value(self, x):
        if isinstance(x, (bool, int, str)) or x is None:
            return x
        if isinstance(x, Fraction) and x.denominator == 1 and self.decimal is None:
            return x.numerator
        if isinstance(x, dict):
            return {k: self.json_value(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [self.json_value(v) for v in x]
        return self(x)


def csv_text(rows, render) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    for i, row in enumerate(rows):
        w.writerow(row if i == 0 else [render(v) for v in row])
    return buf.getvalue()


def json_text(query: dict, result, render: Renderer) -> str:
    return json.dumps({"query": query, "result": render.json_value(result)}, sort_keys=True, indent=2) + "\n"


def write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def emit(args, rows: list[list], query: dict, result=None) -> None:
    """rows[0] is the header; JSON output turns rows into a list of records unless ``result`` is given."""
    render = Renderer(args.decimal)
    if args.format == "json":
        if result is None:
            result = [dict(zip(rows[0], r)) for r in rows[1:]]
        write(json_text(query, result, render), args.out)
    elif args.format == "text":
        write("\n".join(render(r[-1]) for r in rows[1:]) + "\n", args.out)
    else:
        write(csv_text(rows, render), args.out)


# --------------------------------------------------------------------------- parallel map


def _init_worker(cache):
    if cache:
        arith.set_cache_path(cache)


def pmap(fn, items, args):
    items = list(items)
    if args.jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=args.jobs, initializer=_init_worker, initargs=(args.cache,)) as ex:
        return list(ex.map(fn, items))


# --------------------------------------------------------------------------- subcommands


def _trace_cell(cell):
    k, N, n, space = cell
    q = TraceQuery(k, N, n)
    return (trace_new if space == "new" else trace_hecke)(q).value


def cmd_trace(args) -> int:
    cells = [(k, N, n, args.space) for k in args.k for N in args.level for n in args.n]
    vals = pmap(_trace_cell, cells, args)
    rows = [["k", "N", "n", "space", "trace"]] + [list(c) + [v] for c, v in zip(cells, vals)]
    emit(args, rows, {"subcommand": "trace", "k": args.k, "level": args.level, "n": args.n, "space": args.space})
    return EXIT_OK


def _dims_cell(cell):
    k, N, space = cell
    return dim_new(k, N) if space == "new" else dim_cusp(k, N)


def cmd_dims(args) -> int:
    cells = [(k, N, args.space) for k in args.k for N in args.level]
    vals = pmap(_dims_cell, cells, args)
    rows = [["k", "N", "space", "dim"]] + [list(c) + [v] for c, v in zip(cells, vals)]
    emit(args, rows, {"subcommand": "dims", "k": args.k, "level": args.level, "space": args.space})
    return EXIT_OK


def cmd_family_count(args) -> int:
    rows = []
    if args.kind == "supercuspidal":
        rows.append(["k", "q", "pair", "aggregate", "representations"])
        for k in args.k:
            for q in args.primes:
                rows.append([k, q, families.count_sc_pair(k, q), families.count_sc_aggregate(k, q), 2 * (q - 1)])
    else:
        S = tuple(args.primes)
        rows.append(["k", "S", "main", "actual", "defect", "tau_prime"])
        for k in args.k:
            rows.append(
                [
                    k,
                    " ".join(map(str, S)),
                    families.count_st_main(k, S),
                    families.count_st_actual(k, S),
                    families.steinberg_defect(k, S),
                    families.tau_prime_pgl2(S),
                ]
            )
    emit(args, rows, {"subcommand": "family-count", "kind": args.kind, "k": args.k, "primes": args.primes})
    return EXIT_OK


def _equidist_cell(cell):
    k, N, n = cell
    return families.normalized_trace_sum(k, N, n)


def cmd_equidist(args) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be >= 1")
    m = dim_new(args.k, args.level)
    ns = [n for n in range(1, args.nmax + 1) if math.gcd(n, args.level) == 1]
    vals = pmap(_equidist_cell, [(args.k, args.level, n) for n in ns], args)
    rows = [["n", "S_n", "residual", "is_square"]]
    C0 = Fraction(0)
    for n, S in zip(ns, vals):
        sq = arith.is_square(n)
        res = S - (m if sq else 0)
        C0 = max(C0, abs(res) / n)
        rows.append([n, S, res, sq])
    query = {"subcommand": "equidist", "k": args.k, "level": args.level, "nmax": args.nmax}
    result = None
    if args.format == "json":
        result = {"m": m, "C0": C0, "rows": [dict(zip(rows[0], r)) for r in rows[1:]]}
    emit(args, rows, query, result)
    return EXIT_OK


def cmd_orbital(args) -> int:
    gamma = bt.PadicMatrix.parse(args.gamma, args.p)
    prof = bt.decay_profile(gamma, args.smax)
    rows = [["s", "raw_K", "raw_L", "a_K", "a_s"]]
    rows += [[r.s, r.raw_K, r.raw_L, r.a_K, r.a_s] for r in prof.rows]
    query = {"subcommand": "orbital", "p": args.p, "gamma": str(gamma), "smax": args.smax}
    result = None
    if args.format == "json":
        inv = prof.invariants
        result = {
            "invariants": {"D_valuation": inv.D_valuation, "md": inv.md, "sd": inv.sd, "torus": inv.torus},
            "radius": prof.radius,
            "flags": prof.flags,
            "rows": [dict(zip(rows[0], r)) for r in rows[1:]],
        }
    emit(args, rows, query, result)
    return EXIT_OK


def cmd_plancherel(args) -> int:
    query = {"subcommand": "plancherel", "table": args.table, "p": args.p}
    if args.table == "moments":
        rows = [["j", "moment", "exact_moment", "semicircle_moment"]]
        for j in range(args.jmax + 1):
            rows.append([j, plancherel.moment(args.p, j), plancherel.exact_moment(args.p, j), plancherel.semicircle_moment(j)])
        query["jmax"] = args.jmax
    elif args.table == "inversion":
        rows = [["m", "defect"]]
        for m in range(args.mmax + 1):
            rows.append([m, plancherel.inversion_defect(m, args.p)])
        query["mmax"] = args.mmax
    else:
        if args.k is None or args.level is None:
            raise UsageError("--table compare needs --k and --level")
        rep = plancherel.empirical_compare(args.k, args.level, args.p, args.jmax)
        rows = [["j", "empirical", "plancherel", "discrepancy"]]
        rows += [[r.j, str(r.empirical), r.plancherel, r.discrepancy] for r in rep.rows]
        query.update(k=args.k, level=args.level, jmax=args.jmax, m=rep.m)
    emit(args, rows, query)
    return EXIT_OK


def cmd_local_reps(args) -> int:
    result = [d.to_json() for d in local_reps.enumerate_types(args.q)]
    if args.format == "json":
        write(json_text({"subcommand": "local-reps", "q": args.q}, result, Renderer(args.decimal)), args.out)
        return EXIT_OK
    header = ["kind", "q", "conductor", "depth", "count", "pairs", "formal_degree"]
    rows = [header] + [[d[h] if d[h] is not None else "" for h in header] for d in result]
    emit(args, rows, {"subcommand": "local-reps", "q": args.q})
    return EXIT_OK


def cmd_finite_lie(args) -> int:
    if args.group:
        if args.n != 2:
            raise UsageError("--group is only implemented for n = 2")
        res = finite_lie.sweep_group(args.q)
    else:
        res = finite_lie.sweep_lie(args.n, args.q, samples=args.samples, seed=args.seed, exhaustive=args.exhaustive)
    rows = [["n", "q", "kind", "elements", "pairs", "counterexamples"], [res.n, res.q, res.kind, res.elements, res.pairs, res.counterexamples]]
    emit(args, rows, {"subcommand": "finite-lie", "n": args.n, "q": args.q, "exhaustive": args.exhaustive, "group": args.group})
    return EXIT_OK if res.counterexamples == 0 else EXIT_FAIL


def parse_suite(text: str) -> list[int]:
    if text == "all":
        return sorted(acceptance.CRITERIA)
    nums = int_list(text)
    bad = [n for n in nums if n not in acceptance.CRITERIA]
    if bad:
        raise UsageError(f"unknown criteria {bad}; available {sorted(acceptance.CRITERIA)}")
    return nums


def cmd_verify(args) -> int:
    nums = parse_suite(args.suite)
    results = pmap(acceptance.run_criterion, nums, args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    render = Renderer(None)
    summary = [["criterion", "name", "status", "detail"]]
    for r in results:
        print(r.line(), flush=True)
        for name, rows in sorted(r.artifacts.items()):
            write(csv_text(rows, render), str(out / name))
        summary.append([r.number, r.name, "PASS" if r.passed else "FAIL", r.detail])
    write(csv_text(summary, render), str(out / "summary.csv"))
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed" + (f"; failing: {failed}" if failed else ""), flush=True)
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "text"), default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--cache", default=None, help=f"class-number cache file (default ${arith.CACHE_ENV})")
    common.add_argument("--decimal", type=int, default=None, metavar="D", help="render rationals with D significant digits")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    ap = argparse.ArgumentParser(prog="autfam", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, default_format, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn, default_format=default_format)
        return p

    p = add("trace", cmd_trace, "csv", "Hecke traces on S_k(Gamma_0(N))")
    p.add_argument("--k", type=_int_list_arg, required=True)
    p.add_argument("--level", type=_int_list_arg, required=True)
    p.add_argument("--n", type=_int_list_arg, required=True)
    p.add_argument("--space", choices=("new", "full"), default="new")

    p = add("dims", cmd_dims, "text", "dimensions of cusp form spaces")
    p.add_argument("--k", type=_int_list_arg, required=True)
    p.add_argument("--level", type=_int_list_arg, required=True)
    p.add_argument("--space", choices=("new", "cusp"), default="new")

    p = add("family-count", cmd_family_count, "json", "supercuspidal and Steinberg family counts")
    p.add_argument("--k", type=_int_list_arg, required=True)
    p.add_argument("--kind", choices=("supercuspidal", "steinberg"), required=True)
    p.add_argument("--primes", type=_int_list_arg, required=True)

    p = add("equidist", cmd_equidist, "csv", "normalized Hecke trace residuals S(n) - m [n square]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = add("orbital", cmd_orbital, "csv", "orbital integral decay profile on the Bruhat-Tits tree")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--gamma", required=True, help="a,b,c,d")
    p.add_argument("--smax", type=int, required=True)

    p = add("plancherel", cmd_plancherel, "csv", "unramified Plancherel measure tables")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--table", choices=("moments", "inversion", "compare"), default="moments")
    p.add_argument("--jmax", type=int, default=8)
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--k", type=int)
    p.add_argument("--level", type=int)

    p = add("local-reps", cmd_local_reps, "json", "catalog of PGL(2, Q_q) representation types")
    p.add_argument("--q", type=int, required=True)

    p = add("finite-lie", cmd_finite_lie, "text", "finite non-degeneracy sweep; prints the counterexample count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--group", action="store_true", help="sweep semisimple classes of PGL2(F_q) instead")
    p.add_argument("--samples", type=int, default=finite_lie.SL3_SAMPLES)
    p.add_argument("--seed", type=int, default=finite_lie.SEED)

    p = add("verify", cmd_verify, "text", "run the acceptance suite and write artifacts")
    p.add_argument("--suite", default="all")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.format is None:
        args.format = args.default_format
    if args.command == "verify" and args.out is None:
        args.out = "verify-artifacts"
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.cache:
        arith.set_cache_path(args.cache)
    elif os.environ.get(arith.CACHE_ENV):
        arith.set_cache_path(os.environ[arith.CACHE_ENV])
    try:
        return args.func(args)
    except (UsageError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except RuntimeError as exc:
        # resource guards
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
