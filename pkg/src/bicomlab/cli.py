"""Command-line interface.

Exit status: 0 for PASS/true, 1 for FAIL/false, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import consequences as cq
from . import oracle
from .core import element_to_json, enumerate_basis, format_coeff, involute, multilinear_letters
from .magma import eval_bicom, holds_in_finite, load_algebra
from .operators import Product, format_tree, is_jordan, is_lie, jordan_express, lie_express
from .parsing import ParseError, parse_element, parse_identity_poly

SUITES = ("theorem1", "theorem2", "degree4", "section7", "filtration", "oracle", "corollary")


class UsageError(Exception):
    pass


def degree_bound() -> int:
    raw = os.environ.get("BICOMLAB_DEGREE_BOUND", str(cq.DEFAULT_BOUND))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BICOMLAB_DEGREE_BOUND must be an integer, got {raw!r}") from None


def _emit(args, text: str, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _bracket_json(expr):
    return {"expression": str(expr),
            "terms": [{"coeff": format_coeff(c), "expr": format_tree(t)} for t, c in expr.items()]}


def cmd_normalize(args):
    f = parse_element(args.expr)
    _emit(args, str(f), element_to_json(f))
    return 0


def cmd_involute(args):
    f = involute(parse_element(args.expr))
    _emit(args, str(f), element_to_json(f))
    return 0


def cmd_is_jordan(args):
    ok = is_jordan(parse_element(args.expr))
    _emit(args, "true" if ok else "false", {"jordan": ok})
    return 0 if ok else 1


def cmd_is_lie(args):
    ok = is_lie(parse_element(args.expr))
    _emit(args, "true" if ok else "false", {"lie": ok})
    return 0 if ok else 1


def _express(args, test, express, kind):
    f = parse_element(args.expr)
    if not test(f):
        _emit(args, f"not a {kind} element", {"error": f"not a {kind} element"})
        return 1
    expr = express(f)
    _emit(args, str(expr), _bracket_json(expr))
    return 0


def cmd_jordan_express(args):
    return _express(args, is_jordan, jordan_express, "Jordan")


def cmd_lie_express(args):
    return _express(args, is_lie, lie_express, "Lie")


def cmd_check_identity(args):
    p = parse_identity_poly(args.identity)
    value = eval_bicom(p, args.product)
    ok = value.is_zero()
    text = "PASS" if ok else f"FAIL: evaluates to {value}"
    _emit(args, text, {"claim": "identity", "product": args.product, "pass": ok,
                       "value": element_to_json(value)})
    return 0 if ok else 1


def cmd_check_finite(args):
    try:
        A = load_algebra(args.algebra)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load algebra {args.algebra!r}: {exc}") from None
    p = parse_identity_poly(args.identity)
    res = holds_in_finite(p, A)
    payload = {"claim": "finite", "algebra": args.algebra, "pass": res.holds,
               "assignments": res.assignments}
    if res.holds:
        text = f"PASS ({res.assignments} assignments)"
    else:
        value = A.format_vector(res.value)
        witness = ", ".join(f"{k}={v}" for k, v in res.witness.items())
        text = f"FAIL: witness {witness} gives {value}"
        payload["witness"] = res.witness
        payload["value"] = value
    _emit(args, text, payload)
    return 0 if res.holds else 1


def _parse_multidegree(text: str) -> dict[str, int]:
    md = {}
    for part in text.split(","):
        name, sep, count = part.strip().partition(":")
        if not sep:
            raise UsageError(f"bad multidegree entry {part!r}, expected name:count")
        try:
            md[name] = md.get(name, 0) + int(count)
        except ValueError:
            raise UsageError(f"bad count in {part!r}") from None
    return md


def cmd_basis(args):
    words = enumerate_basis(_parse_multidegree(args.multidegree))
    _emit(args, "\n".join(map(str, words)), {"count": len(words), "basis": [str(w) for w in words]})
    return 0


def cmd_dim(args):
    n = args.degree
    if n < 1:
        raise UsageError("degree must be positive")
    if args.kind == "bicom":
        d = len(enumerate_basis(multilinear_letters(n)))
    else:
        bound = degree_bound()
        if n > bound:
            raise UsageError(f"degree {n} exceeds BICOMLAB_DEGREE_BOUND={bound}")
        product = Product.ANTI if args.kind == "jordan" else Product.COM
        d = 1 if n == 1 else cq.image_rank(n, product)
    _emit(args, str(d), {"degree": n, "kind": args.kind, "dim": d})
    return 0


def _suite_reports(suite: str, degree: int | None, bound: int):
    def degrees(low, high):
        if degree is not None:
            if not low <= degree <= high:
                raise UsageError(f"--degree for {suite} must lie in {low}..{high}")
            return [degree]
        return list(range(low, high + 1))

    if suite == "theorem1":
        return [cq.verify_theorem1(n, bound) for n in degrees(2, bound)]
    if suite == "theorem2":
        return [cq.verify_theorem2(n, bound) for n in degrees(2, bound)]
    if suite == "degree4":
        return [cq.verify_degree4_independence()]
    if suite == "section7":
        return [cq.verify_section7()]
    if suite == "filtration":
        return [cq.verify_filtration(n, bound) for n in degrees(1, bound - 2)]
    if suite == "corollary":
        return [cq.verify_corollary(n, bound) for n in degrees(2, bound)]
    top = min(bound, oracle.DEFAULT_BOUND)
    ns = degrees(2, top)
    return [oracle.verify_class_counts(n) for n in ns] + [oracle.verify_product_rule(max(ns))]


def cmd_verify(args):
    bound = degree_bound()
    if args.oracle:
        suites = ["oracle"]
    elif args.suite:
        suites = [args.suite]
    else:
        suites = list(SUITES)
    if args.degree is not None and args.degree > bound:
        raise UsageError(f"degree {args.degree} exceeds BICOMLAB_DEGREE_BOUND={bound}")
    reports = []
    for s in suites:
        reports += _suite_reports(s, args.degree, bound)
    ok = all(r.passed for r in reports)
    if args.json:
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        print(json.dumps(payload))
    else:
        for r in reports:
            print(r)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    parser = argparse.ArgumentParser(prog="bicomlab", parents=[common],
                                     description="Free bicommutative algebras: canonical forms, "
                                                 "Lie/Jordan criteria and identity verification.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, h in [("normalize", cmd_normalize, "canonical form of an element"),
                          ("involute", cmd_involute, "apply the conjugation"),
                          ("is-jordan", cmd_is_jordan, "is the element Jordan (symmetric)?"),
                          ("is-lie", cmd_is_lie, "is the multilinear element Lie?"),
                          ("jordan-express", cmd_jordan_express, "write a Jordan element with {,}"),
                          ("lie-express", cmd_lie_express, "write a Lie element with [,]")]:
        add(name, func, h).add_argument("expr")

    p = add("check-identity", cmd_check_identity, "does an identity hold in every bicommutative algebra?")
    p.add_argument("--product", choices=[x.value for x in Product], default="plain")
    p.add_argument("identity")

    p = add("check-finite", cmd_check_finite, "check a multilinear identity in a finite algebra")
    p.add_argument("--algebra", required=True, help="JSON file or built-in name (martin-A)")
    p.add_argument("identity")

    p = add("basis", cmd_basis, "list basis words of a multidegree")
    p.add_argument("--multidegree", required=True, help="e.g. x:1,y:2")

    p = add("dim", cmd_dim, "multilinear dimension")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", choices=["bicom", "jordan", "lie"], default="bicom")

    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("--degree", type=int)
    p.add_argument("--oracle", action="store_true", help="same as --suite oracle")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
