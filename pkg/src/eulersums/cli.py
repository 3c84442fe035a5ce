"""Command-line front end: ``eulersums eval|identity|verify|coaction|cache``.

Exit status: 0 success/pass, 1 failed verification or divergent evaluation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import identities
from .expr import ParseError, divergent_atoms, format_comb, parse, to_lincomb
from .motivic import coaction_lift, reduce_D1
from .numerics import CacheError, ConstantCache, Precision, eval_comb, eval_identity, open_cache

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_DIGITS = 40
DEFAULT_CACHE_DIR = "./mzv-cache"


def _env_digits() -> int:
    return int(os.environ.get("MZV_DIGITS", DEFAULT_DIGITS))


def _env_cache_dir() -> str:
    return os.environ.get("MZV_CACHE_DIR", DEFAULT_CACHE_DIR)


def _cache(args) -> ConstantCache | None:
    if getattr(args, "no_cache", False):
        return None
    return open_cache(args.cache_dir)


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _identity_params(args) -> dict[str, int]:
    params = {"k": args.k, "l": args.l, "n": args.n}
    if args.name == "depth1" and params["n"] is None:
        params["n"] = args.k
    return params


def cmd_eval(args) -> int:
    expr = parse(args.expr)
    bad = divergent_atoms(expr)
    if bad and not args.regularize:
        print(f"divergent: {', '.join(bad)} (use zr(...) or --regularize)", file=sys.stderr)
        return EXIT_FAIL
    comb = to_lincomb(expr)
    p = Precision(args.digits)
    ball = eval_comb(comb, p, _cache(args))
    payload = {
        "expr": format_comb(comb),
        "digits": args.digits,
        "mid": ball.mid_str(args.digits),
        "rad": ball.rad_str(),
        "rad_log2": ball.rad_log2(),
    }
    _emit(payload, args.json, f"{ball.mid_str(args.digits)} +/- {ball.rad_str()}")
    return EXIT_OK


def cmd_identity(args) -> int:
    if args.action == "list":
        rows = [{"name": n, "params": list(ps)} for n, (_, ps) in identities.IDENTITY_FAMILIES.items()]
        text = "\n".join(f"{r['name']}" + (f"  ({', '.join('--' + p for p in r['params'])})" if r["params"] else "") for r in rows)
        _emit({"identities": rows}, args.json, text)
        return EXIT_OK
    if not args.name:
        print("identity show: missing identity name", file=sys.stderr)
        return EXIT_USAGE
    ident = identities.build(args.name, **_identity_params(args))
    _emit(ident.to_json(), args.json, f"{format_comb(ident.combination)} = 0")
    return EXIT_OK


def cmd_verify(args) -> int:
    ident = identities.build(args.name, **_identity_params(args))
    report = eval_identity(ident, Precision(args.digits), _cache(args))
    _emit(report.to_json(), args.json, str(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_coaction(args) -> int:
    comb = to_lincomb(parse(args.expr))
    if args.r < 1:
        print("--r must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    tensor = coaction_lift(comb, args.r)
    if args.reduce:
        if args.r != 1:
            print("--reduce is only defined for --r 1", file=sys.stderr)
            return EXIT_USAGE
        reduced = reduce_D1(tensor)
        terms = [{"word": list(w), "log2_coeff": str(c)} for w, c in reduced]
        text = "0" if not reduced else "\n".join(f"{c} * [log 2] (x) I({','.join(map(str, w))})" for w, c in reduced)
        _emit({"r": 1, "reduced": True, "terms": terms}, args.json, text)
        return EXIT_OK
    terms = [
        {
            "left": {"lower": left.lower, "letters": list(left.letters), "upper": left.upper},
            "right": list(right),
            "coeff": str(c),
        }
        for (left, right), c in tensor
    ]
    _emit({"r": args.r, "reduced": False, "terms": terms}, args.json, tensor.format())
    return EXIT_OK


def cmd_cache(args) -> int:
    cache = ConstantCache(args.dir)
    if args.action == "clear":
        cache.clear()
        print(f"cleared {cache.path}")
        return EXIT_OK
    stats = cache.stats()
    _emit(stats, args.json, "\n".join(f"{k}: {v}" for k, v in stats.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulersums", description="Exact and ball-arithmetic tools for Euler sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    def numeric(p):
        p.add_argument("--digits", type=int, default=_env_digits())
        p.add_argument("--cache-dir", default=_env_cache_dir())
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--json", action="store_true")

    def params(p):
        p.add_argument("--k", type=int)
        p.add_argument("--l", type=int)
        p.add_argument("--n", type=int)

    p = sub.add_parser("eval", help="evaluate an expression to a ball")
    p.add_argument("expr")
    p.add_argument("--regularize", action="store_true", help="allow divergent z(...)/I(...) (shuffle-regularized)")
    numeric(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("identity", help="list or show generated identities")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", choices=list(identities.IDENTITY_FAMILIES))
    params(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("verify", help="numerically verify an identity")
    p.add_argument("name", choices=list(identities.IDENTITY_FAMILIES))
    params(p)
    numeric(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coaction", help="motivic derivation D_r of an expression")
    p.add_argument("expr")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--reduce", action="store_true", help="reduce D_1 left factors to the log 2 class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coaction)

    p = sub.add_parser("cache", help="inspect or clear the constant cache")
    p.add_argument("action", choices=["stats", "clear"])
    p.add_argument("--dir", default=_env_cache_dir())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, CacheError) as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
