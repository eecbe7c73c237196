"""Command-line front end.

Every command prints one line of JSON on stdout.  Exit codes: 0 success,
2 parse or usage error, 3 capacity or modulus limit, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .counting import PrimePower, approx_count, count_exact, count_mod_prime, count_mod_prime_power
from .decider import decide
from .model import max_capacity, parse_instance, DEFAULT_MAX_CAPACITY
from .oracle import oracle_count
from .sampler import sample_solutions
from .vector import knapsack_optimize, vector_decide


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_modulus(text: str) -> PrimePower:
    base, _, exp = text.partition("^")
    try:
        p, k = int(base), int(exp) if exp else 1
        return PrimePower(p, k)
    except ValueError as exc:
        raise errors.ParseError(f"bad modulus {text!r}: {exc}") from None


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default="-", help="instance JSON file ('-' for stdin)")
    common.add_argument("--meter", action="store_true", help="report working-space usage")
    common.add_argument("--max-capacity", type=int, default=DEFAULT_MAX_CAPACITY)
    common.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="unarysum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("decide", parents=[common])
    count = sub.add_parser("count", parents=[common])
    which = count.add_mutually_exclusive_group(required=True)
    which.add_argument("--modulus", type=str, help="p or p^k")
    which.add_argument("--exact", action="store_true")
    approx = sub.add_parser("approx", parents=[common])
    approx.add_argument("--bits", type=int, default=16)
    sample = sub.add_parser("sample", parents=[common])
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--samples", type=int, default=1)
    sub.add_parser("knapsack", parents=[common])
    vec = sub.add_parser("vector-decide", parents=[common])
    vec.add_argument("--method", choices=("scalarize", "multivariate"), default="scalarize")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise errors.ParseError(str(exc)) from None


def _dispatch(args) -> list[str]:
    kind = {"knapsack": "knapsack", "vector-decide": "vector"}.get(args.command, "scalar")
    inst = parse_instance(_read(args.input), kind)

    if args.command == "decide":
        result, report = decide(inst, metered=args.meter)
        out = {"result": result}
        if args.meter:
            out["space"] = report.to_dict()
        if args.oracle:
            out["oracle"] = oracle_count(inst)
        return [_dumps(out)]
    if args.command == "count":
        if args.exact:
            out = {"count": count_exact(inst)}
            if args.oracle:
                out["oracle"] = oracle_count(inst)
            return [_dumps(out)]
        pp = parse_modulus(args.modulus)
        if pp.k == 1:
            r = count_mod_prime(inst, pp.p)
        else:
            r = count_mod_prime_power(inst, pp)
        return [_dumps({"modulus": str(pp), "residue": r.value})]
    if args.command == "approx":
        if args.bits < 4:
            raise errors.ParseError("--bits must be at least 4")
        return [_dumps(approx_count(inst, args.bits).to_dict())]
    if args.command == "sample":
        draws = sample_solutions(inst, args.seed, args.samples)
        return [_dumps(list(s)) for s in draws]
    if args.command == "knapsack":
        res = knapsack_optimize(inst)
        return [_dumps({"value": res.value, "subset": list(res.subset)})]
    if args.command == "vector-decide":
        return [_dumps({"result": vector_decide(inst, args.method)})]
    raise AssertionError(args.command)


def run(argv=None) -> tuple[int, str]:
    """Run one command; returns (exit code, stdout text)."""
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already wrote usage to stderr
        return int(exc.code or 0), ""
    try:
        with max_capacity(args.max_capacity):
            lines = _dispatch(args)
        return 0, "".join(line + "\n" for line in lines)
    except errors.InputError as exc:
        code, err = 2, exc
    except errors.LimitError as exc:
        code, err = 3, exc
    except errors.DomainError as exc:
        code, err = 4, exc
    except ValueError as exc:
        code, err = 2, exc
    print(f"unarysum: {type(err).__name__}: {err}", file=sys.stderr)
    return code, _dumps({"error": type(err).__name__}) + "\n"


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
