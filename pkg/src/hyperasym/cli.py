"""Command-line surface: expansion, continuation, classification, evaluation
and the verification suites, with reproducible JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath
from mpmath import mp

from .asymp import compute_full_expansion
from .continuation import compute_Mp, continuation_value
from .cyclo import CycloNumber, parse_rational
from .exact import HyperParams, galochkin_classify
from .hring import h_eval, parse_h_element
from .identities import (check_alpha_identity, check_annihilator,
                         check_gauss_suite, check_H_identity,
                         check_L_identity, sqrt2_cyclo)
from .numerics import GUARD_DIGITS, BigComplex, n_pFq

SCHEMA = "hyperasym/1"


def _default_prec():
    try:
        return int(os.environ.get("HYPERASYM_PREC", "50"))
    except ValueError:
        return 50


def _dump(payload, args):
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if args.format == "text":
        text = json.dumps(payload, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_list(text):
    return tuple(parse_rational(t) for t in text.split(",") if t.strip())


def _params(args, need_b=True):
    a = _parse_list(args.a)
    b = _parse_list(args.b) if args.b else ()
    lam = CycloNumber.parse(getattr(args, "lam", "1") or "1")
    return HyperParams(a, b, lam)


def _rel_err(approx, exact, dps):
    with mp.workdps(dps):
        den = max(abs(exact), mpmath.mpf(1))
        return abs(approx - exact) / den


def cmd_expand(args):
    params = _params(args)
    if params.p != params.q:
        raise ValueError("expand needs equally many upper and lower parameters")
    exp = compute_full_expansion(params, args.branch, args.terms,
                                 ck_method=args.ck_method)
    P = args.prec
    dps = P + GUARD_DIGITS
    checks = []
    sgn = 1 if args.branch == "upper" else -1
    with mp.workdps(dps):
        from .numerics import embed_cyclo
        lamv = embed_cyclo(params.scale, P).value
        for radius in (30, 45):
            x = radius * mpmath.exp(sgn * 1j * mpmath.pi / 3)
            approx = exp.eval_at(x, P).value
            exact = n_pFq(params, lamv * x, P).value
            checks.append({"x": mpmath.nstr(x, 8),
                           "rel_err": mpmath.nstr(_rel_err(approx, exact, dps), 4)})
    _dump({"schema": SCHEMA, "command": "expand",
           "params": {"a": args.a, "b": args.b, "lambda": args.lam,
                      "branch": args.branch, "terms": args.terms},
           "expansion": exp.to_json(), "checks": checks}, args)
    return 0


def cmd_continue(args):
    params = _params(args)
    if params.p != params.q + 1:
        raise ValueError("continue needs one more upper than lower parameter")
    exp = compute_Mp(params, args.terms)
    P = args.prec
    dps = P + GUARD_DIGITS
    checks = []
    with mp.workdps(dps):
        for zr in (-7, -30):
            approx = continuation_value(exp, zr, P).value
            try:
                exact = mpmath.hyper([mpmath.mpf(a.numerator) / a.denominator
                                      for a in params.rational_a()],
                                     [mpmath.mpf(b.numerator) / b.denominator
                                      for b in params.b_list], zr)
            except mpmath.libmp.NoConvergence:
                checks.append({"z": str(zr), "rel_err": None})
                continue
            checks.append({"z": str(zr),
                           "rel_err": mpmath.nstr(_rel_err(approx, exact, dps), 4)})
    _dump({"schema": SCHEMA, "command": "continue",
           "params": {"a": args.a, "b": args.b, "terms": args.terms},
           "expansion": exp.to_json(), "checks": checks}, args)
    return 0


def cmd_classify(args):
    a = [CycloNumber.parse(t) for t in args.a.split(",") if t.strip()]
    b = [CycloNumber.parse(t) for t in args.b.split(",") if t.strip()] if args.b else []
    v = galochkin_classify(a, b)
    _dump({"schema": SCHEMA, "command": "classify",
           "is_E_function": v.is_E_function,
           "pairing": [[x.literal(), y.literal()] for x, y in v.pairing],
           "reason": v.reason}, args)
    return 0


def cmd_eval(args):
    el = parse_h_element(args.expr)
    val = h_eval(el, args.prec)
    _dump({"schema": SCHEMA, "command": "eval", "expr": args.expr,
           "prec": args.prec, "value": val.to_str(args.prec)}, args)
    return 0


def cmd_verify(args):
    if args.suite == "identities":
        reports = [check_L_identity(args.terms),
                   check_H_identity(args.terms),
                   check_alpha_identity(Fraction(1), args.terms),
                   check_alpha_identity(sqrt2_cyclo(), args.terms),
                   check_annihilator(1, Fraction(1, 2), max(args.terms, 4),
                                     variant="augmented"),
                   check_annihilator(2, Fraction(1, 3), max(args.terms, 4),
                                     variant="augmented")]
    elif args.suite == "gauss":
        rep = check_gauss_suite(args.qmax, args.smax, args.prec)
        reports = [dict(rep, checks=len(rep["checks"]))]
    else:
        raise ValueError(f"unknown suite {args.suite!r}")
    ok = all(r["status"] == "ok" for r in reports)
    _dump({"schema": SCHEMA, "command": "verify", "suite": args.suite,
           "status": "ok" if ok else "fail", "reports": reports}, args)
    return 0 if ok else 1


def build_parser():
    top = argparse.ArgumentParser(prog="hyperasym")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, b_required=True):
        p.add_argument("--terms", type=int, default=12)
        p.add_argument("--prec", type=int, default=_default_prec())
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("expand", help="asymptotic expansion of pFp at infinity")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--branch", choices=("upper", "lower"), default="upper")
    p.add_argument("--ck-method", default="ode")
    common(p)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("continue", help="analytic continuation of (p+1)Fp")
    p.add_argument("--a", required=True)
    p.add_argument("--b", default="")
    common(p)
    p.set_defaults(fn=cmd_continue)

    p = sub.add_parser("classify", help="E-function criterion for the parameters")
    p.add_argument("--a", required=True)
    p.add_argument("--b", default="")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("eval", help="evaluate a constant-ring expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("identities", "gauss"))
    p.add_argument("--qmax", type=int, default=6)
    p.add_argument("--smax", type=int, default=4)
    common(p)
    p.set_defaults(fn=cmd_verify)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
