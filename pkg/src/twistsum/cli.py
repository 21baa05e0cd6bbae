"""Command-line front end with stable JSON output for scripting.

Commands: construct, invariant, verify, enumerate, selftest. Exit codes are
stable across commands: 0 success/verified, 1 invariant mismatch, 2 usage or
parameter error, 3 declared infeasibility (strand threshold). Identical
inputs produce byte-identical outputs; timing fields appear only with
--timings so golden-file comparisons stay reproducible. The Jones strand
threshold can be overridden with --jones-threshold or the environment
variable TWISTSUM_JONES_THRESHOLD (the flag wins).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from math import gcd

from . import braid as braid_mod
from . import temperley_lieb as tl
from .burau import alexander_from_braid, burau_generator, burau_of_word, BurauMatrix
from .errors import (
    EmptyDiagram,
    ExpressionSyntaxError,
    NotAKnot,
    TooManyStrands,
    TwistsumError,
)
from .family import FamilyParams, LEVELS, family_enumerate, family_verify
from .knot_expr import (
    expr_alexander,
    expr_jones,
    expr_to_braid,
    format_expression,
    parse_expression,
    torus_alexander_closed,
    torus_jones_closed,
)
from .laurent import LaurentPoly

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

ENV_THRESHOLD = "TWISTSUM_JONES_THRESHOLD"


@dataclass(frozen=True)
class CliConfig:
    """Resolved global options shared by the subcommands."""

    output_format: str = "json"
    jones_threshold: int | None = None
    level: str = "standard"
    seed: int = 0


def _resolve_threshold(flag_value: int | None, parser: argparse.ArgumentParser) -> int | None:
    value = flag_value
    if value is None and ENV_THRESHOLD in os.environ:
        try:
            value = int(os.environ[ENV_THRESHOLD])
        except ValueError:
            parser.error(f"{ENV_THRESHOLD} must be an integer")
    if value is not None and value < 2:
        parser.error(f"jones threshold must be >= 2, got {value}")
    return value


def _emit(obj, config: CliConfig) -> None:
    if config.output_format == "json":
        print(json.dumps(obj))
    else:
        _emit_text(obj)


def _emit_text(obj, indent: str = "") -> None:
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) and set(value) == {"var", "terms"}:
                print(f"{indent}{key}: {LaurentPoly.from_json_obj(value).to_text(value['var'])}")
            elif isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(obj, list):
        for i, value in enumerate(obj):
            if i:
                print(f"{indent}-")
            _emit_text(value, indent)
    else:
        print(f"{indent}{obj}")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _infeasible(exc: TooManyStrands, config: CliConfig) -> int:
    _emit(
        {
            "error": "too-many-strands",
            "reason": str(exc),
            "strands": exc.strands,
            "threshold": exc.threshold,
            "basis_size": exc.basis_size,
        },
        config,
    )
    return EXIT_INFEASIBLE


def cmd_construct(args, config: CliConfig) -> int:
    try:
        expr = parse_expression(args.spec)
        if args.format == "expr":
            print(format_expression(expr))
            return EXIT_OK
        word = expr_to_braid(expr)
        if args.format == "braid":
            print(braid_mod.braid_to_text(word))
            return EXIT_OK
        print(braid_mod.pd_code_to_text(braid_mod.closure_pd_code(word)))
        return EXIT_OK
    except ExpressionSyntaxError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (ValueError, EmptyDiagram, NotAKnot) as exc:
        return _fail(str(exc), EXIT_USAGE)


def cmd_invariant(args, config: CliConfig) -> int:
    try:
        expr = parse_expression(args.spec)
    except (ExpressionSyntaxError, ValueError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        if args.which == "alexander":
            value = expr_alexander(expr).to_json_obj()
        elif args.which == "jones":
            value = expr_jones(expr, config.jones_threshold).to_json_obj()
        elif args.which == "determinant":
            value = abs(expr_alexander(expr).eval_unit(-1))
        else:
            value = expr_alexander(expr).span
    except TooManyStrands as exc:
        return _infeasible(exc, config)
    except NotAKnot as exc:
        return _fail(str(exc), EXIT_USAGE)
    _emit({"expr": format_expression(expr), "invariant": args.which, "value": value}, config)
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    try:
        params = FamilyParams(args.a, args.k1, args.k2)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    report = family_verify(params, args.level, config.jones_threshold)
    _emit(report.to_json_obj(include_millis=args.timings), config)
    return EXIT_MISMATCH if report.verdict == "mismatch" else EXIT_OK


def cmd_enumerate(args, config: CliConfig) -> int:
    try:
        members = family_enumerate(args.a_max, args.k1_max, args.k2_max)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    counts = {"pass": 0, "mismatch": 0, "skipped": 0}
    for fp in members:
        report = family_verify(fp, args.level, config.jones_threshold)
        if report.verdict == "verified-at-level":
            counts["pass"] += 1
        elif report.verdict == "mismatch":
            counts["mismatch"] += 1
        else:
            counts["skipped"] += 1
        _emit(report.to_json_obj(include_millis=args.timings), config)
    _emit({"summary": counts}, config)
    return EXIT_MISMATCH if counts["mismatch"] else EXIT_OK


def _selftest_suites(config: CliConfig):
    def torus_alexander_oracle() -> bool:
        for p in range(2, 8):
            for q in range(p + 1, 8):
                if gcd(p, q) != 1:
                    continue
                braidword = braid_mod.torus_braid(p, q)
                if alexander_from_braid(braidword) != torus_alexander_closed(p, q):
                    return False
        return True

    def torus_jones_oracle() -> bool:
        for p, q in ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5)):
            braidword = braid_mod.torus_braid(p, q)
            if tl.jones_from_braid(braidword, config.jones_threshold) != torus_jones_closed(p, q):
                return False
        return True

    def catalan_basis() -> bool:
        expected = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
        return all(
            sum(1 for _ in tl.enumerate_matchings(n)) == expected[n - 1] == tl.catalan(n)
            for n in range(1, 11)
        )

    def burau_relations() -> bool:
        for n in range(3, 6):
            for i in range(1, n - 1):
                a, b = burau_generator(n, i), burau_generator(n, i + 1)
                if a @ b @ a != b @ a @ b:
                    return False
            for i in range(1, n):
                if burau_generator(n, i) @ burau_generator(n, -i) != BurauMatrix.identity(n - 1):
                    return False
        return True

    def temperley_lieb_relations() -> bool:
        for n in range(2, 6):
            vecs = [{m: LaurentPoly.one()} for m in tl.enumerate_matchings(n)]
            for i in range(1, n):
                for vec in vecs:
                    back = tl.tl_apply_letter(tl.tl_apply_letter(vec, i, n), -i, n)
                    if back != vec:
                        return False
        return True

    def markov_sample() -> bool:
        rng = random.Random(config.seed)
        for _ in range(25):
            n = rng.randint(2, 5)
            while True:
                letters = tuple(
                    rng.choice([s * i for s in (1, -1) for i in range(1, n)])
                    for _ in range(rng.randint(1, 12))
                )
                word = braid_mod.BraidWord(n, letters)
                if braid_mod.is_knot_closure(word):
                    break
            base_alex = alexander_from_braid(word)
            base_jones = tl.jones_from_braid(word, config.jones_threshold)
            conj = rng.choice([s * i for s in (1, -1) for i in range(1, n)])
            conjugated = braid_mod.BraidWord(n, (conj,) + letters + (-conj,))
            stabilized = braid_mod.BraidWord(n + 1, letters + (rng.choice([n, -n]),))
            for moved in (conjugated, stabilized):
                if alexander_from_braid(moved) != base_alex:
                    return False
                if tl.jones_from_braid(moved, config.jones_threshold) != base_jones:
                    return False
        return True

    return [
        ("torus-alexander-oracle", torus_alexander_oracle),
        ("torus-jones-oracle", torus_jones_oracle),
        ("catalan-basis", catalan_basis),
        ("burau-relations", burau_relations),
        ("temperley-lieb-relations", temperley_lieb_relations),
        ("markov-sample", markov_sample),
    ]


def cmd_selftest(args, config: CliConfig) -> int:
    results = []
    all_ok = True
    for name, suite in _selftest_suites(config):
        start = time.perf_counter()
        ok = suite()
        entry = {"suite": name, "ok": ok}
        if args.timings:
            entry["millis"] = round((time.perf_counter() - start) * 1000.0, 1)
        results.append(entry)
        all_ok = all_ok and ok
    _emit({"selftest": results, "ok": all_ok}, config)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistsum",
        description="Exact braid-closure knot invariants and twisted-torus-knot verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "text"),
                        default="json", help="output format (default json)")
    common.add_argument("--jones-threshold", type=int, default=None,
                        help="strand threshold for Jones computations (default 12)")
    common.add_argument("--timings", action="store_true",
                        help="include wall-time fields in reports")
    sub = parser.add_subparsers(dest="command", required=True)

    # construct prints plain text and has its own output selector, so it does
    # not take the common json/text flags
    p_construct = sub.add_parser("construct", help="construct a knot from an expression")
    p_construct.add_argument("spec", help='expression, e.g. "T(2,3)" or "TT(9,5,7,-1)"')
    p_construct.add_argument("--format", dest="format", choices=("braid", "pd", "expr"),
                             default="braid", help="what to print (default braid)")
    p_construct.set_defaults(func=cmd_construct)

    p_invariant = sub.add_parser("invariant", parents=[common],
                                 help="compute one invariant of an expression")
    p_invariant.add_argument("spec")
    p_invariant.add_argument("which", choices=("alexander", "jones", "determinant", "span"))
    p_invariant.set_defaults(func=cmd_invariant)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="verify one family member against its decomposition")
    p_verify.add_argument("--a", type=int, required=True)
    p_verify.add_argument("--k1", type=int, required=True)
    p_verify.add_argument("--k2", type=int, required=True)
    p_verify.add_argument("--level", choices=LEVELS, default="standard")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", parents=[common],
                            help="sweep the family over a parameter box")
    p_enum.add_argument("--a-max", type=int, required=True)
    p_enum.add_argument("--k1-max", type=int, required=True)
    p_enum.add_argument("--k2-max", type=int, required=True)
    p_enum.add_argument("--level", choices=LEVELS, default="alexander")
    p_enum.set_defaults(func=cmd_enumerate)

    p_self = sub.add_parser("selftest", parents=[common],
                            help="run the built-in oracle suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threshold = _resolve_threshold(getattr(args, "jones_threshold", None), parser)
    config = CliConfig(
        output_format=getattr(args, "output_format", "json"),
        jones_threshold=threshold,
        level=getattr(args, "level", "standard"),
        seed=getattr(args, "seed", 0),
    )
    try:
        return args.func(args, config)
    except TwistsumError as exc:
        return _fail(str(exc), EXIT_USAGE)


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
