"""``gamechrom`` command line: chig, solve, verify, enumerate.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource exhaustion (memo table full).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
import time
from itertools import chain
from pathlib import Path

from .classify import classify
from .enumeration import forests_of_order, trees_of_order
from .forest import ForestError
from .game import GameState, Player, Ruleset
from .solver import CacheFileError, MemoCapacityError, Solver, TranspositionTable, load_cache, save_cache
from .textformat import ParseError, format_position, read_position
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load(path):
    try:
        return read_position(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _memo_table(args) -> TranspositionTable:
    if getattr(args, "memo_mb", None) is not None:
        return TranspositionTable(max_entries=args.memo_mb * 1024 * 1024 // 160)
    return TranspositionTable()


def cmd_chig(args, out) -> int:
    p = _load(args.input)
    if p.colored_vertices or any(p.external):
        raise UsageError("chig needs an uncolored forest")
    t0 = time.perf_counter()
    c = classify(p.forest)
    secs = time.perf_counter() - t0
    witness = {"rule": c.rule}
    if c.b_vertex is not None:
        witness["b_vertex"] = c.b_vertex
    witness.update(c.detail)
    if args.format == "json":
        json.dump({"value": c.value, "method": c.method, "witness": witness, "seconds": round(secs, 6)}, out)
        out.write("\n")
    else:
        out.write(f"{c}\n")
        for k, v in witness.items():
            out.write(f"  {k}: {v}\n")
        out.write(f"  time: {secs:.3f}s\n")
    return EXIT_OK


def _ruleset(args) -> Ruleset:
    try:
        rules = Ruleset.named(args.rules, args.t, args.k)
        if args.first is not None:
            rules = dataclasses.replace(rules, first_mover=Player(args.first))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return rules


def cmd_solve(args, out) -> int:
    p = _load(args.input)
    rules = _ruleset(args)
    try:
        s = GameState(p, rules.first_mover, rules)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    solver = Solver(p.forest, rules, _memo_table(args))
    if args.cache and os.path.exists(args.cache):
        try:
            loaded = load_cache(solver, args.cache)
        except CacheFileError as exc:
            raise UsageError(str(exc)) from exc
        out.write(f"cache: {loaded} entries loaded\n")
    t0 = time.perf_counter()
    if args.depth is not None:
        ok = solver.bob_wins_within(s, args.depth)
        verdict = f"certified BobWin within {args.depth} Bob moves" if ok else "inconclusive"
    else:
        verdict = solver.solve(s).value
    secs = time.perf_counter() - t0
    st = solver.stats()
    out.write(f"{verdict}\n")
    out.write(f"  rules: {rules.name} t={rules.t} first={rules.first_mover.value}\n")
    out.write(f"  nodes: {st.nodes}  memo entries: {st.table_entries}  hits: {st.hits}  misses: {st.misses}\n")
    out.write(f"  time: {secs:.3f}s\n")
    if args.cache and args.depth is None:
        save_cache(solver, args.cache)
    return EXIT_OK


CSV_FIELDS = ("suite", "instance", "result", "detail", "seconds")


def cmd_verify(args, out) -> int:
    try:
        results = run_suite(args.suite, args.max_n, args.jobs, long=args.long)
        first = next(results, None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fails = total = 0
    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(CSV_FIELDS)
    records = []
    for r in chain([first] if first else [], results):
        total += 1
        fails += not r.ok
        tag = "PASS" if r.ok else "FAIL"
        if writer:
            writer.writerow((r.suite, r.instance, tag, r.detail, f"{r.seconds:.6f}"))
        elif args.format == "json":
            records.append({**r.as_dict(), "seconds": round(r.seconds, 6)})
        elif not args.quiet or not r.ok:
            out.write(f"{tag} {r.instance}: {r.detail}\n")
    summary = {"suite": args.suite, "instances": total, "failures": fails}
    if args.format == "json":
        json.dump({"summary": summary, "results": records}, out, indent=1)
        out.write("\n")
    elif not writer:
        out.write(f"{args.suite}: {total} instances, {fails} failures\n")
    return EXIT_FAIL if fails else EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.n < 0 or (args.n == 0 and not args.forests):
        raise UsageError("trees need --n >= 1; forests need --n >= 0")
    graphs = list(forests_of_order(args.n) if args.forests else trees_of_order(args.n))
    kind = "forest" if args.forests else "tree"
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        width = len(str(len(graphs)))
        for i, g in enumerate(graphs):
            (d / f"{kind}{args.n}_{i:0{width}d}.forest").write_text(format_position(g), encoding="utf-8")
        out.write(f"{len(graphs)} {kind}s written to {d}\n")
    else:
        out.write("---\n".join(format_position(g) for g in graphs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gamechrom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("chig", help="game chromatic number of a forest file")
    c.add_argument("input")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_chig)

    s = sub.add_parser("solve", help="exact verdict, or bounded Bob certificate with --depth")
    s.add_argument("input")
    s.add_argument("--rules", choices=("std", "mcg", "ecg", "rcg"), default="std")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--k", type=int, default=3, help="degree threshold for rcg")
    s.add_argument("--first", choices=("alice", "bob"))
    s.add_argument("--depth", type=int)
    s.add_argument("--cache", help="transposition cache file to read and update")
    s.add_argument("--memo-mb", type=int, help="memo cap in MB (default: GAMECHROM_MEMO_MB or 1024)")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-n", type=int)
    v.add_argument("--jobs", type=int, help="worker processes (default: GAMECHROM_JOBS or 1)")
    v.add_argument("--format", choices=("text", "csv", "json"), default="text")
    v.add_argument("--long", action="store_true", help="allow runs beyond the desk-scale bound")
    v.add_argument("--quiet", action="store_true", help="text format: print failures and summary only")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="print all non-isomorphic trees (or forests) of an order")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--forests", action="store_true")
    e.add_argument("--out", help="directory for one file per graph instead of stdout")
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"gamechrom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ForestError, ValueError) as exc:
        print(f"gamechrom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MemoCapacityError, RecursionError, MemoryError) as exc:
        print(f"gamechrom: resource exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
