"""Exhaustive verification suites over enumerated forests and stored gadgets.

A suite is a list of independent instances plus a checker run on each.
Instances are plain tuples so they can be shipped to worker processes, and
results come back in instance order whatever the worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from .classify import classify_no_deg3, is_chi_g_2
from .enumeration import forests_of_order, trees_of_order
from .forest import Forest, Position, build_forest
from .game import ALICE, BOB, BOB_WIN, GameState, Ruleset
from .solver import Solver, bob_wins_within, game_chromatic_number
from .strategies import alice_small_trunk_3mcg, verify_policy

# A000055 and A005195, used as the reference for enumeration-counts
TREE_COUNTS = (1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320)
FOREST_COUNTS = (1, 1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601, 3658, 8599, 20514, 49905)


@dataclass(frozen=True)
class Result:
    suite: str
    instance: str
    ok: bool
    detail: str
    seconds: float

    def as_dict(self) -> dict:
        return asdict(self)


def _edges(f: Forest) -> tuple:
    return (f.n, tuple(f.sorted_edges()))


def _forest(spec) -> Forest:
    n, edges = spec
    return build_forest(n, edges)


def _name(spec, extra: str = "") -> str:
    n, edges = spec
    body = " ".join(f"{u}-{v}" for u, v in edges) or "-"
    return f"n={n} [{body}]{extra}"


# -- instance checkers --------------------------------------------------------


def _check_gcn2(spec):
    f = _forest(spec)
    claim, clause = is_chi_g_2(f)

    def wins(t):
        s = GameState.start(f, Ruleset.standard(t))
        return Solver(f, s.ruleset).alice_wins(s)

    # fewer colors may already suffice, so 2 must win and 1 must lose
    exact = wins(2) and not wins(1)
    return claim == exact, f"characterization={claim} ({clause}) solver={exact}"


def _check_u13(spec):
    f = _forest(spec)
    s = GameState.start(f, Ruleset.standard(3))
    win = Solver(f, s.ruleset).alice_wins(s)
    return win, "Alice wins with 3 colors" if win else "Bob wins with 3 colors"


def _check_small_trunk(item):
    spec, leaf = item
    f = _forest(spec)
    p = Position(f)
    if leaf is not None:
        p = p.with_color(leaf, 0)
    s = GameState(p, BOB, Ruleset.mcg(3))
    exact = Solver(f, s.ruleset).alice_wins(s)
    policy = verify_policy(alice_small_trunk_3mcg, s)
    return exact and policy, f"solver={'AliceWin' if exact else 'BobWin'} policy={'wins' if policy else 'loses'}"


def _check_nodeg3(spec):
    f = _forest(spec)
    c = classify_no_deg3(f)
    exact = game_chromatic_number(f)
    return c.value == exact, f"closed form={c.value} solver={exact}"


def _check_enum(item):
    kind, n = item
    if kind == "trees":
        got, want = sum(1 for _ in trees_of_order(n)), TREE_COUNTS[n]
    else:
        got, want = sum(1 for _ in forests_of_order(n)), FOREST_COUNTS[n]
    return got == want, f"{kind} of order {n}: {got} generated, {want} expected"


def _check_gadget(item):
    from . import constructions as cs

    name = item
    if name in ("p5", "p4plus"):
        f = cs.path(5) if name == "p5" else cs.p4_plus()
        s = GameState.start(f, Ruleset.ecg(2))
        v = Solver(f, s.ruleset).solve(s)
        return v is BOB_WIN, f"2-ECG verdict {v.value}"
    site = None if name == "fig3" else name.split(":", 1)[1]
    p = cs.fig3_position(site)
    ok = bob_wins_within(GameState(p, ALICE, Ruleset.ecg(3)), 3)
    return ok, "Bob wins the 3-ECG within 3 moves" if ok else "certification inconclusive"


def _check_s8(item):
    from . import constructions as cs

    if item == "validate":
        try:
            suite = cs.section8_suite()
        except cs.TranscriptionError as exc:
            return False, f"{cs.TRANSCRIPTION_INVALID}: {exc}"
        prov = sorted(k for k in suite if k in cs.PROVISIONAL)
        return True, f"all {len(suite)} gadgets meet their constraints (provisional: {', '.join(prov)})"
    if item == "t_double_prime":
        f = cs.t_double_prime()
        s = GameState.start(f, Ruleset.standard(3))
        win = Solver(f, s.ruleset).alice_wins(s)
        return not win, f"three copies of H glued: {'AliceWin' if win else 'BobWin'} with 3 colors (provisional)"
    report = {r.name: r for r in cs.certify_small_gadgets()}[item]
    return report.ok, f"{report.status}: {report.message}"


# -- suites -------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    default_max_n: Optional[int]
    instances: Callable[[int], list]
    check: Callable
    label: Callable = _name
    hard_max_n: Optional[int] = None


def _forests_upto(n):
    return [_edges(f) for k in range(n + 1) for f in forests_of_order(k)]


def _trees_upto(n, lo=1):
    return [_edges(t) for k in range(lo, n + 1) for t in trees_of_order(k)]


def _small_trunk_items(n):
    out = []
    for spec in _trees_upto(n):
        f = _forest(spec)
        out.append((spec, None))
        out.extend((spec, v) for v in f.vertices if f.degrees[v] == 1)
    return out


def _nodeg3_items(n):
    return [spec for spec in _trees_upto(n) if 3 not in _forest(spec).degrees]


SUITES = {
    s.name: s
    for s in [
        Suite("thm-gcn2", 8, _forests_upto, _check_gcn2),
        Suite("thm-u13", 11, _trees_upto, _check_u13, hard_max_n=11),
        Suite(
            "lemma-small-trunk",
            7,
            _small_trunk_items,
            _check_small_trunk,
            label=lambda it: _name(it[0], "" if it[1] is None else f" leaf {it[1]} colored"),
        ),
        Suite("thm-nodeg3", 12, _nodeg3_items, _check_nodeg3),
        Suite(
            "lemma-gadgets-s4",
            None,
            lambda _n: ["p5", "p4plus", "fig3", "fig3:x1'", "fig3:x1''", "fig3:x2'", "fig3:x2''"],
            _check_gadget,
            label=str,
        ),
        Suite(
            "lemma-gadgets-s8",
            None,
            lambda _n: ["validate", "t1", "surrounded_p4", "t_double_prime"],
            _check_s8,
            label=str,
        ),
        Suite(
            "enumeration-counts",
            10,
            lambda n: [("trees", k) for k in range(1, n + 1)] + [("forests", k) for k in range(n + 1)],
            _check_enum,
            label=lambda it: f"{it[0]} n={it[1]}",
        ),
    ]
}


def _timed(check, item):
    t0 = time.perf_counter()
    ok, detail = check(item)
    return bool(ok), detail, time.perf_counter() - t0


def _run_one(args):
    name, item = args
    return _timed(SUITES[name].check, item)


def default_jobs() -> int:
    return int(os.environ.get("GAMECHROM_JOBS", "1"))


def run_suite(name: str, max_n: Optional[int] = None, jobs: Optional[int] = None, long: bool = False) -> Iterable[Result]:
    """Yield one ``Result`` per instance, in a fixed order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    n = suite.default_max_n if max_n is None else max_n
    if n is not None and suite.hard_max_n is not None and n > suite.hard_max_n and not long:
        raise ValueError(f"{name} above n={suite.hard_max_n} is a long run; pass long=True (--long)")
    if n is not None and name == "enumeration-counts" and n >= len(TREE_COUNTS):
        raise ValueError(f"reference counts stop at n={len(TREE_COUNTS) - 1}")
    items = suite.instances(n)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1:
        outcomes = (_timed(suite.check, it) for it in items)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        outcomes = pool.map(_run_one, [(name, it) for it in items], chunksize=max(1, len(items) // (8 * jobs)))
    try:
        for it, (ok, detail, secs) in zip(items, outcomes):
            yield Result(name, suite.label(it), ok, detail, secs)
    finally:
        if jobs > 1:
            pool.shutdown(cancel_futures=True)
