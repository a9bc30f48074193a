"""Command-line frontend: ``onepart compute|table|oracle|moduli|verify``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from .exact import fmt
from .hurwitz import double_cutjoin, one_part, one_part_polynomial, spin_one_part_result
from .moduli import PsiQuery, chiodo_g1_deg01, chiodo_g1_summands, linear_hodge, psi_dvv
from .oracle import BudgetExceeded, HurwitzQuery, double_hurwitz, raw_count
from .partitions import Partition, all_partitions, parse_partition
from .relations import SUITES, run_suite

ROUTES = ("series", "oracle", "cutjoin")


class CrossCheckError(RuntimeError):
    pass


def _exps(text: str) -> List[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse exponents {text!r}") from exc
    if not out:
        raise ValueError("empty exponent list")
    return out


def _zero_profile(args, mu: Partition) -> Partition:
    if args.one_part:
        return Partition((mu.size,))
    if args.orbifold is not None:
        q = args.orbifold
        if q < 1 or mu.size % q:
            raise ValueError(f"orbifold order {q} does not divide d = {mu.size}")
        return Partition((q,) * (mu.size // q))
    if args.nu is not None:
        return parse_partition(args.nu)
    raise ValueError("give --nu, --one-part or --orbifold")


def _by_route(route: str, g: int, mu: Partition, nu: Partition, budget) -> Fraction:
    if route == "series":
        if len(nu) != 1:
            raise ValueError("the series route needs a one-part zero profile (use --one-part)")
        return one_part(g, mu)
    if route == "oracle":
        return double_hurwitz(HurwitzQuery(g, mu, nu), budget)
    if route == "cutjoin":
        return double_cutjoin(g, mu, nu, budget)
    raise ValueError(f"unknown route {route!r}")


def _timed(fn, *a):
    t0 = time.perf_counter()
    value = fn(*a)
    return value, int((time.perf_counter() - t0) * 1e6)


def cmd_compute(args) -> List[dict]:
    g = args.genus
    if args.polynomial:
        if args.n is None:
            raise ValueError("--polynomial needs --n")
        poly, micros = _timed(one_part_polynomial, g, args.n)
        return [{"g": g, "n": args.n, "value": poly.render(), "polynomial": poly.to_json(),
                 "route": "series-polynomial", "micros": micros}]
    if args.mu is None:
        raise ValueError("--mu is required")
    mu = parse_partition(args.mu)
    if args.spin is not None:
        res, micros = _timed(spin_one_part_result, g, mu, args.spin)
        rec = {"g": g, "mu": str(mu), "r": args.spin, "value": fmt(res.value), "route": "spin-series",
               "micros": micros}
        if not res.divisible:
            rec["note"] = "(2g-1+n)/r is not an integer"
        return [rec]
    nu = _zero_profile(args, mu)
    HurwitzQuery(g, mu, nu)  # validates sizes
    routes = [r for r in ROUTES if r != "series" or len(nu) == 1] if args.cross_check else [args.route or (
        "series" if len(nu) == 1 else "cutjoin")]
    records = []
    for route in routes:
        value, micros = _timed(_by_route, route, g, mu, nu, args.budget)
        records.append({"g": g, "mu": str(mu), "nu": str(nu), "value": fmt(value), "route": route,
                        "micros": micros})
    if len({r["value"] for r in records}) > 1:
        detail = ", ".join(f"{r['route']}={r['value']}" for r in records)
        raise CrossCheckError(f"routes disagree for g={g}, mu={mu}, nu={nu}: {detail}")
    return records


def cmd_table(args) -> List[dict]:
    records = []
    for mu in all_partitions(args.d):
        sub = argparse.Namespace(**vars(args))
        sub.mu = str(mu)
        sub.polynomial = False
        sub.n = None
        records.extend(cmd_compute(sub))
    return records


def cmd_oracle(args) -> List[dict]:
    mu = parse_partition(args.mu)
    nu = _zero_profile(args, mu)
    q = HurwitzQuery(args.genus, mu, nu)
    raw, micros = _timed(raw_count, q, args.budget)
    value = double_hurwitz(q, args.budget)
    return [{"g": q.g, "mu": str(mu), "nu": str(nu), "m": q.m, "raw": raw, "value": fmt(value),
             "route": "oracle", "micros": micros}]


def cmd_moduli(args) -> List[dict]:
    if args.what == "psi":
        q = PsiQuery(args.genus, tuple(_exps(args.exp)))
        value, micros = _timed(psi_dvv, q)
        return [{"g": q.g, "exp": ",".join(map(str, q.exponents)), "value": fmt(value), "route": "dvv",
                 "micros": micros}]
    if args.what == "hodge":
        value, micros = _timed(linear_hodge, args.genus, args.d)
        return [{"g": args.genus, "d": args.d, "value": fmt(value), "route": "faber-pandharipande",
                 "micros": micros}]
    if args.what == "chiodo-g1":
        value, micros = _timed(chiodo_g1_deg01, args.d)
        rec = {"d": args.d, "value": fmt(value), "route": "stable-graphs", "micros": micros}
        rec.update({k: fmt(v) for k, v in chiodo_g1_summands(args.d).items()})
        return [rec]
    raise ValueError(f"unknown moduli quantity {args.what!r}")


def _emit(records: List[dict], fmt_name: str, out) -> None:
    if fmt_name == "json":
        payload = records[0] if len(records) == 1 else records
        out.write(json.dumps(payload, indent=1, ensure_ascii=False) + "\n")
    elif fmt_name == "csv":
        cols: List[str] = []
        for r in records:
            for k, v in r.items():
                if k not in cols and not isinstance(v, dict):
                    cols.append(k)
        # value, route, micros last
        cols = [c for c in cols if c not in ("value", "route", "micros")] + ["value", "route", "micros"]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(r)
        out.write(buf.getvalue())
    else:
        if len(records) == 1:
            out.write(f"{records[0]['value']}\n")
        else:
            for r in records:
                key = " ".join(f"{k}={r[k]}" for k in r if k not in ("value", "route", "micros", "polynomial"))
                out.write(f"{key}\t{r['value']}\t{r['route']}\n")


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.gmax, args.dmax, args.threads, args.budget)
    text = report.to_json(with_timing=args.timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    elif args.format == "text":
        c = report.counts()
        sys.stdout.write(f"{report.identity}: {'PASS' if report.passed else 'FAIL'} "
                         f"(pass {c['pass']}, smoke {c['smoke']}, skip {c['skip']}, fail {c['fail']})\n")
        for p in report.failures():
            sys.stdout.write(f"  FAIL {p.to_dict()}\n")
    else:
        sys.stdout.write(text + "\n")
    print(f"{args.suite}: {report.elapsed:.3f} s", file=sys.stderr)
    if not report.passed:
        for p in report.failures():
            print(f"failed at {p.params}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="text (default) or json for verify")
    common.add_argument("--budget", type=int, default=None,
                        help="oracle/cut-and-join work budget (default: $HURWITZ_BUDGET or 1e9)")
    common.add_argument("--out", default=None, help="write output to this file")

    profile = argparse.ArgumentParser(add_help=False)
    profile.add_argument("--genus", "-g", type=int, required=True)
    profile.add_argument("--mu", help="profile over infinity, e.g. 3,1,1")
    zero = profile.add_mutually_exclusive_group()
    zero.add_argument("--nu", help="profile over zero")
    zero.add_argument("--one-part", action="store_true", help="zero profile (d)")
    zero.add_argument("--orbifold", type=int, metavar="Q", help="zero profile (Q,...,Q)")
    zero.add_argument("--spin", type=int, metavar="R", help="one-part r-spin number")
    profile.add_argument("--route", choices=ROUTES)
    profile.add_argument("--cross-check", action="store_true", help="run every route and require agreement")

    p = argparse.ArgumentParser(prog="onepart", description="Exact one-part double Hurwitz numbers and related intersection numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common, profile], help="a single Hurwitz number or polynomial")
    c.add_argument("--polynomial", action="store_true", help="print P_{g,n} symbolically")
    c.add_argument("--n", type=int, help="number of parts for --polynomial")

    t = sub.add_parser("table", parents=[common, profile], help="values for every mu of size d")
    t.add_argument("--d", type=int, required=True)

    sub.add_parser("oracle", parents=[common, profile], help="brute-force count")

    m = sub.add_parser("moduli", parents=[common], help="psi, Hodge and Chiodo integrals")
    m.add_argument("what", choices=("psi", "hodge", "chiodo-g1"))
    m.add_argument("--genus", "-g", type=int, default=0)
    m.add_argument("--exp", help="psi exponents, e.g. 1,0,2")
    m.add_argument("--d", type=int)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=tuple(SUITES), required=True)
    v.add_argument("--gmax", type=int)
    v.add_argument("--dmax", type=int)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include elapsed time in the JSON report")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "json" if args.command == "verify" else "text"
    try:
        if args.command == "verify":
            if args.threads < 1:
                raise ValueError("--threads must be >= 1")
            return cmd_verify(args)
        if args.command == "moduli":
            if args.what == "psi" and not args.exp:
                raise ValueError("moduli psi needs --exp")
            if args.what in ("hodge", "chiodo-g1") and args.d is None:
                raise ValueError(f"moduli {args.what} needs --d")
        handler = {"compute": cmd_compute, "table": cmd_table, "oracle": cmd_oracle, "moduli": cmd_moduli}
        if args.command == "oracle" and args.mu is None:
            raise ValueError("--mu is required")
        records = handler[args.command](args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                _emit(records, args.format, fh)
        else:
            _emit(records, args.format, sys.stdout)
        return 0
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
