"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .braids import parse_braid
from .errors import FramedLinksError
from .esystem import esystem_suite, parse_selector, solve_all
from .invariants import BRANCHES, InvariantParams, braid_trace, gamma_json, invariant_suite, skein_suite
from .padic import (
    PAdicAlgebraApprox,
    e_padic,
    gamma_stabilization,
    padic_suite,
    tau_prefix,
)
from .report import SuiteReport
from .trace import trace_properties_suite
from .yokonuma import embed_braid, relation_suite

SUITES = ("relations", "trace", "esystem", "invariant", "skein", "padic")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """'re' or 're,im'; each part may be a fraction such as 1/2."""
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r}")
    try:
        vals = [float(Fraction(p.strip())) for p in parts]
    except (ValueError, ZeroDivisionError):
        try:
            return complex(text.replace(" ", ""))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad complex literal {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="modulus of the framing")
    common.add_argument("--p", type=int, help="prime for p-adic prefixes")
    common.add_argument("--depth", type=int, help="number of levels p, p^2, ... (default 4)")
    common.add_argument("--strands", type=int, default=2, help="strand count n (default 2)")
    common.add_argument("--u", type=parse_complex, default=complex(2), help="value of u as 're' or 're,im'")
    common.add_argument("--z", type=parse_complex, default=complex(0.5), help="value of z as 're' or 're,im'")
    common.add_argument("--solution", default=None,
                        help="E-system solution: subset bitmask (e.g. 0b110), 'delta' or 'cyclic:a'")
    common.add_argument("--branch", choices=BRANCHES, default="principal", help="branch of sqrt(omega)")
    common.add_argument("--tol", type=positive_float, default=1e-8, help="verification tolerance")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="framedlinks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", parents=[common], help="symbolic Markov trace of a framed braid")
    p.add_argument("braid", help="word such as 's1 s1 t1^2 t2^-1'")

    p = sub.add_parser("invariant", parents=[common], help="value of Gamma_d on a braid closure")
    p.add_argument("braid")

    sub.add_parser("esolve", parents=[common], help="list all E-system solutions for order d")

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)

    p = sub.add_parser("padic", help="p-adic prefix reports")
    actions = p.add_subparsers(dest="action", required=True)
    actions.add_parser("coherency", parents=[common], help="coherence and trace commutation suite")
    q = actions.add_parser("stabilize", parents=[common], help="Gamma_(p^r) for r = 1..depth")
    q.add_argument("braid")
    q = actions.add_parser("trace", parents=[common], help="entrywise trace of a constant sequence")
    q.add_argument("--braid", default="", help="braid word (default: the idempotent e_1)")
    return parser


def _level_config(args) -> str:
    if args.d is not None and (args.p is not None or args.depth is not None):
        raise UsageError("give either --d or --p/--depth, not both")
    if args.d is not None:
        if args.d < 1:
            raise UsageError("--d must be positive")
        return "d"
    if args.p is not None:
        if args.p < 2:
            raise UsageError("--p must be at least 2")
        if args.depth is None:
            args.depth = 4
        if args.depth < 1:
            raise UsageError("--depth must be positive")
        return "p"
    raise UsageError("one of --d or --p is required")


def _need_d(args) -> int:
    if _level_config(args) != "d":
        raise UsageError(f"'{args.command}' needs --d")
    return args.d


def _params(args, d: int) -> InvariantParams:
    selector = args.solution if args.solution is not None else "delta" if d > 1 else "1"
    sol = parse_selector(selector, d)
    return InvariantParams(d, sol, args.u, args.z, args.branch)


def _emit(args, obj, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _emit_report(args, rep: SuiteReport) -> int:
    _emit(args, rep.to_json_obj(), rep.table())
    return 0 if rep.ok else 1


def cmd_trace(args) -> int:
    d = _need_d(args)
    w = parse_braid(args.braid, args.strands)
    poly = braid_trace(w, d)
    _emit(args, {"braid": args.braid, "d": d, "strands": w.n, "trace": poly.to_json_obj()}, str(poly))
    return 0


def cmd_invariant(args) -> int:
    d = _need_d(args)
    w = parse_braid(args.braid, args.strands)
    obj = gamma_json(args.braid, w, _params(args, d))
    g = complex(*obj["gamma"])
    text = (f"Gamma_{d} = {g.real:.12g}{g.imag:+.12g}i  (support {obj['support']}, "
            f"branch {obj['branch']}, epsilon {obj['epsilon']}, strands {obj['strands']})")
    _emit(args, obj, text)
    return 0


def cmd_esolve(args) -> int:
    d = _need_d(args)
    sols = solve_all(d)
    lines = [f"{len(sols)} solutions of the E-system for d = {d}"]
    for s in sols:
        vals = ", ".join(f"{v.real:.6g}{v.imag:+.6g}i" for v in s.x_vector())
        lines.append(f"  S={list(s.support)}  E_d={s.E:.6g}  residual={s.residual():.1e}  x=({vals})")
    _emit(args, {"d": d, "solutions": [s.to_json_obj() for s in sols]}, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    mode = _level_config(args)
    suite = args.suite
    if suite == "padic":
        if mode != "p":
            raise UsageError("'check padic' needs --p/--depth")
        return _emit_report(args, padic_suite(args.p, args.depth, args.strands, seed=args.seed))
    if mode != "d":
        raise UsageError(f"'check {suite}' needs --d")
    d, n = args.d, args.strands
    if suite == "relations":
        rep = relation_suite(d, n)
    elif suite == "trace":
        rep = trace_properties_suite(d, n, seed=args.seed)
    elif suite == "esystem":
        rep = esystem_suite(d, tol=min(args.tol, 1e-10))
    elif suite == "invariant":
        rep = invariant_suite(d, args.u, args.z, seed=args.seed, tol=args.tol)
    else:
        rep = skein_suite(d, args.u, args.z, seed=args.seed, tol=args.tol)
    return _emit_report(args, rep)


def cmd_padic(args) -> int:
    if _level_config(args) != "p":
        raise UsageError("'padic' needs --p/--depth")
    p, depth = args.p, args.depth
    if args.action == "coherency":
        return _emit_report(args, padic_suite(p, depth, args.strands, seed=args.seed))
    if args.action == "trace":
        if args.braid:
            w = parse_braid(args.braid, args.strands)
            top = embed_braid(w, p ** depth)
            seq = PAdicAlgebraApprox.constant(p, depth, top)
        else:
            seq = e_padic(p, depth, max(args.strands, 2), 1)
        tau = tau_prefix(seq)
        text = "\n".join(f"  level {r} (d={p ** r}): {q}" for r, q in enumerate(tau.entries, start=1))
        _emit(args, tau.to_json_obj(), f"tau prefix, p={p}, depth={depth}, delta-coherent\n{text}")
        return 0
    w = parse_braid(args.braid, args.strands)
    base = parse_selector(args.solution if args.solution is not None else "delta" if p > 2 else "0b10", p)
    rep = gamma_stabilization(w, p, depth, base, args.u, args.z, args.branch, args.tol)
    return _emit_report(args, rep)


COMMANDS = {
    "trace": cmd_trace,
    "invariant": cmd_invariant,
    "esolve": cmd_esolve,
    "check": cmd_check,
    "padic": cmd_padic,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, FramedLinksError, ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
