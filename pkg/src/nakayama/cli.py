"""Command-line interface: ``nakayama analyze|render|verify|convert``.

Exit codes: 0 success, 2 usage or parse error, 3 a check failed.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import random
import sys
from pathlib import Path

from .algebra import CYCLIC, LINEAR, AdmissibilityError, EmptySeries, ParseError, parse, serialize
from .perm import DyckPath, MalformedPath, dyck_to_kupisch, kupisch_to_dyck
from .report import RENDER_KINDS, analyze, plain, render, to_json, to_table
from .search import ALL_SUITES, SUITES, WitnessSearch, random_algebra, run_suite, search_space

EXIT_OK, EXIT_USAGE, EXIT_CONTRADICTION = 0, 2, 3

# suites that search the whole range for examples instead of checking each algebra
WITNESS_SUITES = {
    "witness-search": None,
    "psi-gamma-components": "quivers",
}

INPUT_ERRORS = (AdmissibilityError, EmptySeries, ParseError, MalformedPath)


class UsageError(Exception):
    pass


def _algebra_arg(args):
    text = args.kupisch or args.series
    if not text:
        raise UsageError("an algebra is required, e.g. -k cyclic:3,2,3,4")
    try:
        return parse(text)
    except INPUT_ERRORS as exc:
        raise UsageError(f"cannot read {text!r}: {exc}") from exc


def cmd_analyze(args) -> int:
    A = _algebra_arg(args)
    report, ok = analyze(A)
    sys.stdout.write(to_json(report) if args.format == "json" else to_table(report))
    return EXIT_OK if ok else EXIT_CONTRADICTION


def cmd_render(args) -> int:
    A = _algebra_arg(args)
    sys.stdout.write(render(A, args.kind))
    return EXIT_OK


def cmd_convert(args) -> int:
    text = args.text.strip()
    try:
        if ":" in text:
            A = parse(text)
            if A.kind != LINEAR:
                raise UsageError("only linear algebras have a Dyck path")
            print(kupisch_to_dyck(A))
        else:
            print(serialize(dyck_to_kupisch(DyckPath(text))))
    except INPUT_ERRORS as exc:
        raise UsageError(f"cannot convert {text!r}: {exc}") from exc
    return EXIT_OK


def _suite_names(raw: list[str]) -> list[str]:
    names = []
    for item in raw or ["all"]:
        for name in item.split(","):
            name = name.strip()
            expanded = ALL_SUITES if name == "all" else (name,)
            for s in expanded:
                if s not in SUITES and s not in WITNESS_SUITES:
                    known = ", ".join(sorted(SUITES) + sorted(WITNESS_SUITES) + ["all"])
                    raise UsageError(f"unknown suite {s!r}; choose from {known}")
                if s not in names:
                    names.append(s)
    return names


def _work_items(args, kinds) -> list[str]:
    items = [serialize(A) for A in search_space(args.simples_max, args.len_max, kinds)]
    if args.sample:
        rng = random.Random(args.seed)
        seen = set(items)
        for _ in range(args.sample):
            kind = rng.choice(kinds)
            n = rng.randint(args.simples_max + 1, args.simples_max + 3)
            text = serialize(random_algebra(rng, n, args.len_max + 2, kind))
            if text not in seen:
                seen.add(text)
                items.append(text)
    return items


def _write_case(out: Path, index: int, text: str, suite: str, check: str, witness: str) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"case-{index:04d}.json"
    case = {
        "algebra": text,
        "suite": suite,
        "check": check,
        "witness": witness,
        "reproduce": f"nakayama analyze -k {text}",
    }
    path.write_text(json.dumps(case, indent=2) + "\n")
    return path


def cmd_verify(args) -> int:
    if args.simples_max < 1 or args.len_max < 1 or args.jobs < 1 or args.sample < 0:
        raise UsageError("--simples-max, --len-max and --jobs must be positive")
    suites = _suite_names(args.suite)
    if args.cyclic or args.linear:
        kinds = tuple(k for k, flag in ((CYCLIC, args.cyclic), (LINEAR, args.linear)) if flag)
    else:
        kinds = (CYCLIC, LINEAR)
    out = Path(args.out) if args.out else None
    total_failures = 0

    per_algebra = [s for s in suites if s in SUITES]
    if per_algebra:
        items = _work_items(args, kinds)
        tasks = [(text, tuple(per_algebra)) for text in items]
        counts = {s: 0 for s in per_algebra}
        if args.jobs > 1:
            with multiprocessing.Pool(args.jobs) as pool:
                results = list(pool.imap(run_suite, tasks, chunksize=8))
        else:
            results = [run_suite(t) for t in tasks]
        for text, failures in results:
            for suite, check, witness in failures:
                counts[suite] += 1
                total_failures += 1
                print(f"FAIL {suite} {text}: {check}: {witness}")
                if out is not None:
                    _write_case(out, total_failures, text, suite, check, witness)
        for s in per_algebra:
            print(f"{s}: {len(items)} algebras, {counts[s]} failures")

    for s in suites:
        if s not in WITNESS_SUITES:
            continue
        pattern = WITNESS_SUITES[s] or args.pattern
        try:
            search = WitnessSearch(pattern)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
        found = search.run(search_space(args.simples_max, args.len_max, kinds))
        missing = 0
        for name, w in found.items():
            if w is None:
                missing += 1
                print(f"{name}: not found")
            else:
                detail = json.dumps(plain(w.detail), default=str)
                print(f"{name}: {' and '.join(serialize(A) for A in w.algebras)} {detail}")
        print(f"{s}: {len(found) - missing} of {len(found)} witnesses found")
        total_failures += missing

    print(f"total failures: {total_failures}")
    return EXIT_OK if total_failures == 0 else EXIT_CONTRADICTION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nakayama", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_options(p):
        p.add_argument("series", nargs="?", help='Kupisch series "kind:c1,...,cn"')
        p.add_argument("-k", "--kupisch", help="same as the positional argument")

    p = sub.add_parser("analyze", help="full report for one algebra")
    algebra_options(p)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="DOT graph for one algebra")
    algebra_options(p)
    p.add_argument("--kind", choices=RENDER_KINDS, default="ar")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("convert", help="linear Kupisch series <-> Dyck path")
    p.add_argument("text", help='"linear:c1,...,cn" or a word in U and D')
    p.set_defaults(func=cmd_convert)

    suites = ", ".join(f"{k} ({v[1]})" for k, v in SUITES.items())
    p = sub.add_parser("verify", help="run check suites over all small algebras")
    p.add_argument("--simples-max", type=int, default=5, help="largest number of simples")
    p.add_argument("--len-max", type=int, default=7, help="largest projective length")
    p.add_argument(
        "--suite",
        action="append",
        help=f"repeatable or comma separated; 'all' means {', '.join(ALL_SUITES)}. Per-algebra suites: {suites}. "
        "Searches: witness-search (with --pattern), psi-gamma-components",
    )
    p.add_argument("--pattern", default="all", help="witness group for witness-search")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=0, help="random algebras beyond the exhaustive range")
    p.add_argument("--out", help="directory for counterexample case files")
    p.add_argument("--cyclic", action="store_true", help="only cyclic algebras")
    p.add_argument("--linear", action="store_true", help="only linear algebras")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"nakayama: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
