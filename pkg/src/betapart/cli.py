"""Command-line entry point: ``betapart <command> ...``.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import enumerator, mary, pell, verifier, witness
from .classifier import classify
from .errors import BetaPartitionError, ConsistencyError, ResourceError
from .quadfield import QuadPoly, parse_elem, roots

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    text = text.strip()
    return [int(t) for t in text.split(",")] if text else []


def _poly(text: str) -> QuadPoly:
    try:
        return QuadPoly.parse(text)
    except (BetaPartitionError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _csv(rows: list[dict], header: list[str], out) -> None:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in r.items()})
    out.write(buf.getvalue())


def _alpha(args, f: QuadPoly):
    """``(element, digits)``; exactly one of them is set."""
    if args.digits is not None:
        return None, _int_list(args.digits)
    D = roots(f)[0].D if f.is_real else None
    return parse_elem(args.alpha, D), None


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args, out) -> int:
    _dump(classify(args.poly).to_dict(), out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    f = args.poly
    alpha, digits = _alpha(args, f)
    if args.method == "descend":
        if digits is not None:
            from .quadfield import evaluate
            alpha = evaluate(digits, enumerator.base_root(f, args.conjugate))
        n = enumerator.count_descending(f, alpha, args.conjugate, args.max_nodes)
    else:
        ctx = enumerator.CountContext(f, args.conjugate, args.max_nodes)
        n = ctx.count_digits(digits) if digits is not None else ctx.count(alpha)
    _dump(n, out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    f = args.poly
    alpha, digits = _alpha(args, f)
    ctx = enumerator.CountContext(f, args.conjugate, args.max_nodes)
    parts = ctx.enumerate_digits(digits) if digits is not None else ctx.enumerate(alpha)
    _dump([list(q) for q in parts], out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    _dump(witness.witness(args.poly).to_dict(args.k), out)
    return EXIT_OK


def cmd_pell(args, out) -> int:
    rows = pell.family_rows(args.d, args.count)
    if args.format == "json":
        _dump(rows, out)
    else:
        _csv(rows, ["x", "y", "a", "b", "Tr", "Nm"], out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    f = args.poly
    if args.claim == "thm2":
        reports = [verifier.verify_thm2(f, args.nmax if args.nmax is not None else 5)]
    elif args.claim == "lemmae":
        top = args.nmax if args.nmax is not None else 5
        reports = [verifier.verify_lemmaE(f, n) for n in range(top + 1)]
    elif args.claim == "opt1":
        reports = [verifier.verify_opt1(f, args.nmax if args.nmax is not None else 6)]
    else:
        reports = [verifier.verify_opt2(f)]
    if len(reports) == 1:
        _dump(reports[0].to_dict(), out)
    else:
        _dump({"claim": reports[0].claim, "poly": str(f),
               "all_ok": all(r.all_ok for r in reports),
               "reports": [r.to_dict() for r in reports]}, out)
    return EXIT_OK if all(r.all_ok for r in reports) else EXIT_FAILED


def cmd_mary(args, out) -> int:
    m, N = args.m, args.n
    if args.congruence:
        rows = []
        for n in range(N + 1):
            lhs, rhs, ok = mary.afs_congruence_check(m, n)
            rows.append({"n": n, "b_m(mn) mod m": lhs, "prod(a_i+1) mod m": rhs,
                         "ok": ok})
        header = ["n", "b_m(mn) mod m", "prod(a_i+1) mod m", "ok"]
        status = EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAILED
    else:
        rows = [{"n": n, "b_m(n)": mary.bm(m, n)} for n in range(N + 1)]
        header = ["n", "b_m(n)"]
        status = EXIT_OK
    if args.growth_diagnostic:
        for r in rows:
            n = r["n"]
            r["growth_diagnostic_float"] = (
                f"{mary.growth_diagnostic(m, n):.6f}" if n >= 2 else "")
        header.append("growth_diagnostic_float")
    if args.format == "json":
        _dump(rows, out)
    else:
        _csv(rows, header, out)
    return status


def cmd_table(args, out) -> int:
    moduli = _int_list(args.moduli)
    if args.m is not None:
        targets = list(range((args.n or 0) + 1))
        rows = verifier.congruence_table(args.m, targets, moduli)
    else:
        if args.poly is None:
            raise argparse.ArgumentTypeError("table needs --poly or --m")
        f = args.poly
        D = roots(f)[0].D if f.is_real else None
        targets: list = [parse_elem(a, D) for a in args.alpha or []]
        targets += [tuple(_int_list(d)) for d in args.digits or []]
        if args.trace_powers is not None:
            targets += [(0,) * n + (f.E,) for n in range(args.trace_powers + 1)]
        rows = verifier.congruence_table(f, targets, moduli)
    header = ["target", "count"] + [f"mod_{m}" for m in moduli]
    if rows and "afs" in rows[0]:
        header.append("afs")
    if args.format == "json":
        _dump(rows, out)
    else:
        _csv(rows, header, out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betapart",
        description="Partitions of quadratic-field elements into powers of a quadratic beta.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly(p, required=True):
        p.add_argument("--poly", type=_poly, required=required, metavar="A,B,C",
                       help="beta is the larger root of A*x^2 + B*x + C")

    def add_alpha(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--alpha", help='element "(p+q*sqrt(D))/r" or a rational')
        g.add_argument("--digits", help="a0,a1,... meaning sum(a_i * beta^i)")
        p.add_argument("--conjugate", action="store_true",
                       help="take beta to be the smaller root")
        p.add_argument("--max-nodes", type=int, default=enumerator.DEFAULT_MAX_NODES)

    p = sub.add_parser("classify", help="finiteness regime of p_beta")
    add_poly(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="number of partitions of alpha")
    add_poly(p)
    add_alpha(p)
    p.add_argument("--method", choices=["peel", "descend"], default="peel")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="all partitions of alpha as coefficient vectors")
    add_poly(p)
    add_alpha(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="distinct partitions certifying an infinite value")
    add_poly(p)
    p.add_argument("--k", type=int, default=5)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("pell", help="bases built from solutions of x^2 - D y^2 = 1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("verify", help="instance checks; exit 1 on any failure")
    p.add_argument("claim", choices=["thm2", "lemmae", "opt1", "opt2"])
    add_poly(p)
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mary", help="m-ary partition function table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--congruence", action="store_true")
    p.add_argument("--growth-diagnostic", action="store_true",
                   help="append a floating-point column for inspection only")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_mary)

    p = sub.add_parser("table", help="partition counts modulo small integers")
    add_poly(p, required=False)
    p.add_argument("--m", type=int, help="integer base instead of --poly")
    p.add_argument("--n", type=int, help="with --m: targets 0..N")
    p.add_argument("--alpha", action="append")
    p.add_argument("--digits", action="append")
    p.add_argument("--trace-powers", type=int, metavar="N",
                   help="targets Tr(beta)*beta^n for n = 0..N")
    p.add_argument("--moduli", default="2")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args, out)
    except ResourceError as exc:
        print(f"betapart: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"betapart: consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (BetaPartitionError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"betapart: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main
