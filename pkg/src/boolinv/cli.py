"""
Command-line surface: check elements, emit counting tables, convert to and
from Motzkin paths, export Hasse diagrams, enumerate involutions, and run
the self-test suite.

Exit codes: `check` exits 0 for Boolean, 1 for non-Boolean, 2 on usage or
parse errors; `table --method verify` and `selftest` exit 1 when any check
fails; every other error path exits 2.  The default output format is JSON
and can be changed with the BOOLINV_FORMAT environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import counting, ideals, motzkin
from .boolean import METHODS, BooleanVerdict, is_boolean
from .involution_words import ResourceLimitError, rank_profile
from .permutations import (
    Involution,
    ParseError,
    format_permutation,
    parse_permutation,
)
from .signed import (
    SIGNED_METHODS,
    SignedInvolution,
    embed,
    format_signed,
    is_boolean_signed,
    parse_signed,
)

USAGE_ERROR = 2


def _default_format() -> str:
    return os.environ.get("BOOLINV_FORMAT", "json")


def _parse_involution(text: str) -> Involution:
    w = parse_permutation(text)
    if not isinstance(w, Involution):
        raise ParseError(f"{text!r} is not an involution")
    return w


def _parse_signed_involution(text: str) -> SignedInvolution:
    w = parse_signed(text)
    if not isinstance(w, SignedInvolution):
        raise ParseError(f"{text!r} is not a signed involution")
    return w


def _verdict_payload(element: str, verdict: BooleanVerdict, profile) -> dict:
    payload = json.loads(verdict.to_json())
    payload["element"] = element
    payload["rank"] = profile.rank
    payload["coxeter_length"] = profile.coxeter_length
    payload["absolute_length"] = profile.absolute_length
    return payload


def _print_verdict(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
        return
    print(f"element: {payload['element']}")
    print(f"boolean: {str(payload['is_boolean']).lower()}")
    print(
        f"rank: {payload['rank']}  length: {payload['coxeter_length']}"
        f"  two-cycles: {payload['absolute_length']}"
    )
    if payload["is_boolean"]:
        print(f"repeat-free word: {','.join(str(i) for i in payload['word'])}")
    else:
        i, j = payload["long_crossing_pair"]
        print(f"long-crossing pair: ({i},{j})")
        occ = payload["occurrence"]
        print(
            f"pattern {payload['pattern']} at positions "
            f"({','.join(str(p) for p in occ['positions'])}) values "
            f"({','.join(str(v) for v in occ['values'])})"
        )


def cmd_check(args: argparse.Namespace) -> int:
    if args.signed:
        w = _parse_signed_involution(args.element)
        method = args.method or "embedding"
        if method not in SIGNED_METHODS:
            raise ParseError(
                f"bad signed method {method!r}; expected one of {SIGNED_METHODS}"
            )
        verdict = is_boolean_signed(w, method)
        profile = rank_profile(Involution(embed(w).perm.word))
        payload = _verdict_payload(format_signed(w), verdict, profile)
        payload["signed"] = True
    else:
        w = _parse_involution(args.element)
        method = args.method or "long_crossing"
        if method not in METHODS:
            raise ParseError(f"bad method {method!r}; expected one of {METHODS}")
        verdict = is_boolean(w, method)
        payload = _verdict_payload(format_permutation(w), verdict, rank_profile(w))
    _print_verdict(payload, args.format or _default_format())
    return 0 if verdict.is_boolean else 1


_TABLE_BUILDERS = {
    ("f", "brute"): lambda n, jobs: counting.brute_inv_exc_counts(n, jobs),
    ("f", "recurrence"): lambda n, jobs: counting.recurrence_inv_exc_counts(n),
    ("f", "gf"): lambda n, jobs: counting.series_inv_exc_counts(n),
    ("g", "brute"): lambda n, jobs: counting.brute_rank_counts(n, jobs),
    ("g", "recurrence"): lambda n, jobs: counting.recurrence_rank_counts(n),
    ("g", "gf"): lambda n, jobs: counting.series_rank_counts(n),
    ("h", "brute"): lambda n, jobs: counting.brute_totals(n, jobs),
    ("h", "recurrence"): lambda n, jobs: counting.recurrence_totals(n),
    ("h", "gf"): lambda n, jobs: counting.series_totals(n),
}

_TABLE_COLUMNS = {
    "f": ("n", "inversions", "excedances", "count"),
    "g": ("n", "rank", "count"),
    "h": ("n", "count"),
}


def cmd_table(args: argparse.Namespace) -> int:
    if args.method == "verify":
        report = counting.cross_validate(args.max_n, jobs=args.jobs)
        print(report.summary())
        return 0 if report.passed else 1
    table = _TABLE_BUILDERS[(args.stat, args.method)](args.max_n, args.jobs)
    fmt = args.format or _default_format()
    if fmt == "tsv" or fmt == "text":
        sys.stdout.write(counting.table_to_tsv(table, _TABLE_COLUMNS[args.stat]))
    else:
        print(counting.table_to_json(table))
    return 0


def cmd_motzkin(args: argparse.Namespace) -> int:
    if args.direction == "to-path":
        w = _parse_involution(args.argument)
        print(motzkin.format_path(motzkin.involution_to_path(w)))
    else:
        path = motzkin.parse_path(args.argument)
        try:
            w = motzkin.path_to_involution(path)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        print(format_permutation(w))
    return 0


def cmd_ideal(args: argparse.Namespace) -> int:
    w = _parse_involution(args.element)
    poset = ideals.ideal(w)
    boolean = ideals.is_boolean_lattice(poset)
    cert = (
        f"// boolean lattice: {str(boolean).lower()}; elements: {len(poset)};"
        f" rank: {poset.ranks[-1]}"
    )
    text = cert + "\n" + ideals.dot_export(poset)
    if args.output:
        with open(args.output, "w") as sink:
            sink.write(text)
        print(cert)
    else:
        sys.stdout.write(text)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    shard, num_shards = 0, 1
    if args.shard:
        try:
            shard_text, num_text = args.shard.split("/")
            shard, num_shards = int(shard_text), int(num_text)
        except ValueError:
            raise ParseError(f"bad shard spec {args.shard!r}; expected K/M") from None
    if args.signed:
        for sw in counting.signed_involutions(args.n, shard, num_shards):
            if args.boolean_only and not is_boolean_signed(sw).is_boolean:
                continue
            print(format_signed(sw))
    else:
        for w in counting.involutions(args.n, shard, num_shards):
            if args.boolean_only and not is_boolean(w).is_boolean:
                continue
            print(format_permutation(w))
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    from .selfcheck import run_selfcheck

    results = run_selfcheck(args.max_n)
    for check in results:
        line = f"{'PASS' if check.passed else 'FAIL'} {check.name}"
        if check.detail:
            line += f": {check.detail}"
        print(line)
    ok = all(check.passed for check in results)
    print("selftest: " + ("ok" if ok else "FAILED"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolinv",
        description="Boolean involutions in the Bruhat order: check, count, convert.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether an involution is Boolean")
    p.add_argument("element", help="one-line permutation, or signed window with --signed")
    p.add_argument("--signed", action="store_true")
    p.add_argument("--method", default=None, help="criterion to use")
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="emit a counting table")
    p.add_argument("stat", choices=("f", "g", "h"),
                   help="f: by inversions and excedances; g: by rank; h: totals")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "recurrence", "gf", "verify"),
                   default="recurrence")
    p.add_argument("--format", choices=("json", "tsv", "text"), default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("motzkin", help="convert between involutions and paths")
    p.add_argument("direction", choices=("to-path", "from-path"))
    p.add_argument("argument")
    p.set_defaults(func=cmd_motzkin)

    p = sub.add_parser("ideal", help="export the Hasse diagram of an ideal as DOT")
    p.add_argument("element")
    p.add_argument("--output", default=None, help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("enumerate", help="stream involutions, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--boolean-only", action="store_true")
    p.add_argument("--signed", action="store_true")
    p.add_argument("--shard", default=None, help="K/M: emit the K-th of M shards")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", help="run the cross-module invariant suite")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
