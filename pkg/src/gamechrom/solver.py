"""Exact win/loss search for the coloring game variants.

The search state is what the future of a game actually depends on: for
every uncolored vertex the set of colors it can no longer take (a bit mask),
plus the side to move. Colored vertices are stored as ``0xFF``. Keys are
made palette-symmetric by taking the least image of the mask string under
every color permutation.
"""

from __future__ import annotations

import hashlib
import os
import sys
import threading
from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple, Optional

from .forest import Forest, Position, distance, DisconnectedError
from .game import (
    ALICE,
    ALICE_WIN,
    BOB,
    BOB_WIN,
    GameState,
    Move,
    Ruleset,
    Verdict,
    apply_move,
    legal_moves,
    terminal,
)

COLORED = 0xFF
MAX_PALETTE = 7
_BYTES_PER_ENTRY = 160
DEFAULT_MEMO_MB = 1024


class MemoCapacityError(RuntimeError):
    """The transposition table reached its cap in fail-loud mode."""


class CacheFileError(ValueError):
    pass


class TranspositionTable:
    """Canonical key -> Alice-wins flag, with a hard entry cap.

    By default a full table raises ``MemoCapacityError``; ``lossy=True``
    clears it instead, which keeps verdicts exact but costs recomputation.
    """

    def __init__(self, max_entries: Optional[int] = None, lossy: bool = False):
        if max_entries is None:
            mb = int(os.environ.get("GAMECHROM_MEMO_MB", DEFAULT_MEMO_MB))
            max_entries = mb * 1024 * 1024 // _BYTES_PER_ENTRY
        self.max_entries = max_entries
        self.lossy = lossy
        self.data: dict = {}
        self.hits = 0
        self.misses = 0
        self.evictions = 0
        self._lock = threading.Lock()

    def get(self, key):
        val = self.data.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, value: bool) -> None:
        if len(self.data) >= self.max_entries and key not in self.data:
            if not self.lossy:
                raise MemoCapacityError(
                    f"transposition table full at {self.max_entries} entries; "
                    "raise GAMECHROM_MEMO_MB or use lossy mode"
                )
            self.data.clear()
            self.evictions += 1
        self.data[key] = value

    def publish(self, key, value: bool) -> None:
        """Idempotent insert for tables shared between solver instances."""
        with self._lock:
            old = self.data.get(key)
            if old is not None and old != value:
                raise AssertionError(f"conflicting verdicts published for key {key.hex()}")
            self.put(key, value)

    def __len__(self):
        return len(self.data)


class SolveStats(NamedTuple):
    nodes: int
    table_entries: int
    hits: int
    misses: int


def _popcounts():
    return bytes(bin(i).count("1") for i in range(256))


_PC = _popcounts()


class Solver:
    """Memoized AND/OR search for one forest under one ruleset."""

    def __init__(
        self,
        forest: Forest,
        ruleset: Ruleset,
        table: Optional[TranspositionTable] = None,
        symmetry: bool = True,
    ):
        if ruleset.t > MAX_PALETTE:
            raise ValueError(f"solver supports palettes of at most {MAX_PALETTE} colors")
        self.forest = forest
        self.rules = ruleset
        self.n = forest.n
        self.t = ruleset.t
        self.full = (1 << self.t) - 1
        self.adj = forest.adj
        self.relevant = tuple(ruleset.is_relevant(forest, v) for v in range(self.n))
        k = ruleset.alice_min_degree
        self.alice_ok = tuple(k is None or forest.degrees[v] >= k for v in range(self.n))
        self.table = table if table is not None else TranspositionTable()
        self.nodes = 0
        self.max_depth = 2 * self.n + self.t * self.n + 1
        self._tables = self._perm_tables(symmetry)
        self._cert_memo: dict = {}

    def _perm_tables(self, symmetry: bool) -> list:
        ident = bytes(range(256))
        if not symmetry or self.t > 5 or self.t < 2:
            return [ident]
        out = []
        for perm in permutations(range(self.t)):
            tb = bytearray(ident)
            for m in range(self.full + 1):
                img = 0
                for c in range(self.t):
                    if m >> c & 1:
                        img |= 1 << perm[c]
                tb[m] = img
            out.append(bytes(tb))
        return out

    # -- encoding -----------------------------------------------------------

    def encode(self, s: GameState) -> bytes:
        p = s.position
        out = bytearray(self.n)
        for v in range(self.n):
            if p.coloring[v] is not None:
                out[v] = COLORED
            else:
                m = 0
                for c in p.forbidden(v):
                    m |= 1 << c
                out[v] = m
        return bytes(out)

    def key(self, forb: bytes, alice: bool) -> bytes:
        adj, full = self.adj, self.full
        b = None
        counts = [0, 0, 0, 0]
        for v in range(self.n):
            m = forb[v]
            if m == COLORED or m == full:
                continue
            for w in adj[v]:
                if forb[w] != COLORED:
                    break
            else:
                # no uncolored neighbor: only its tempo matters
                if b is None:
                    b = bytearray(forb)
                b[v] = COLORED
                counts[2 * self.relevant[v] + self.alice_ok[v]] += 1
        if self.rules.bob_may_pass:
            counts[0] = 0
        base = forb if b is None else bytes(b)
        if len(self._tables) > 1:
            base = min(base.translate(tb) for tb in self._tables)
        return base + bytes(counts) + (b"A" if alice else b"B")

    # -- position analysis --------------------------------------------------

    def _status(self, forb: bytes):
        """``False`` if Bob has won, ``True`` if Alice has won (or cannot lose), else ``None``."""
        adj, t, full, rel = self.adj, self.t, self.full, self.relevant
        open_rel = False
        all_safe = True
        for v in range(self.n):
            m = forb[v]
            if m == COLORED or not rel[v]:
                continue
            if m == full:
                return False
            open_rel = True
            if all_safe:
                unc = 0
                for w in adj[v]:
                    if forb[w] != COLORED:
                        unc += 1
                if _PC[m] + unc >= t:
                    all_safe = False
        if not open_rel or all_safe:
            return True
        return None

    def _bob_has_kill(self, forb: bytes) -> bool:
        adj, t, full, rel = self.adj, self.t, self.full, self.relevant
        for u in range(self.n):
            m = forb[u]
            if m == COLORED or not rel[u] or _PC[m] != t - 1:
                continue
            alpha = full & ~m
            for w in adj[u]:
                fw = forb[w]
                if fw != COLORED and not fw & alpha:
                    return True
        return False

    def _color(self, forb: bytes, v: int, c: int) -> bytes:
        b = bytearray(forb)
        b[v] = COLORED
        bit = 1 << c
        for w in self.adj[v]:
            if b[w] != COLORED:
                b[w] |= bit
        return bytes(b)

    def children(self, forb: bytes, alice: bool) -> list:
        """Successor mask strings, best-first for the mover."""
        adj, t, full = self.adj, self.t, self.full
        scored = []
        pressure = {}
        for v in range(self.n):
            m = forb[v]
            if m != COLORED:
                unc = 0
                for w in adj[v]:
                    if forb[w] != COLORED:
                        unc += 1
                pressure[v] = _PC[m] + unc
        for v in range(self.n):
            m = forb[v]
            if m == COLORED:
                continue
            if alice and not self.alice_ok[v]:
                continue
            for c in range(t):
                bit = 1 << c
                if m & bit:
                    continue
                # how much this color squeezes the neighbors
                squeeze = 0
                for w in adj[v]:
                    fw = forb[w]
                    if fw != COLORED and not fw & bit:
                        squeeze = max(squeeze, pressure[w] + 1)
                if alice:
                    score = (-pressure[v], squeeze, v, c)
                else:
                    score = (-squeeze, -pressure[v], v, c)
                scored.append((score, self._color(forb, v, c)))
        scored.sort(key=lambda x: x[0])
        out = [b for _, b in scored]
        if alice and self.rules.alice_may_add_leaf:
            for v in range(self.n):
                m = forb[v]
                if m == COLORED:
                    continue
                for c in range(t):
                    if not m & (1 << c):
                        b = bytearray(forb)
                        b[v] = m | (1 << c)
                        out.append(bytes(b))
        if (alice and self.rules.alice_may_pass) or (not alice and self.rules.bob_may_pass):
            out.append(forb)
        return out

    # -- exact search -------------------------------------------------------

    def _search(self, forb: bytes, alice: bool, key: bytes, depth: int) -> bool:
        table = self.table
        hit = table.get(key)
        if hit is not None:
            return hit
        if depth > self.max_depth:
            raise AssertionError("search depth exceeded the finiteness bound")
        self.nodes += 1
        res = self._status(forb)
        if res is None:
            if not alice and self._bob_has_kill(forb):
                res = False
            else:
                seen = set()
                res = not alice
                nxt = not alice
                for child in self.children(forb, alice):
                    ck = self.key(child, nxt)
                    if ck in seen:
                        continue
                    seen.add(ck)
                    win = self._search(child, nxt, ck, depth + 1)
                    if alice and win:
                        res = True
                        break
                    if not alice and not win:
                        res = False
                        break
                else:
                    if not seen:
                        raise AssertionError("non-terminal state without moves")
        table.put(key, res)
        return res

    def alice_wins(self, s: GameState) -> bool:
        forb = self.encode(s)
        alice = s.to_move is ALICE
        limit = sys.getrecursionlimit()
        need = 4 * self.max_depth + 200
        if limit < need:
            sys.setrecursionlimit(need)
        return self._search(forb, alice, self.key(forb, alice), 0)

    def solve(self, s: GameState) -> Verdict:
        return ALICE_WIN if self.alice_wins(s) else BOB_WIN

    # -- bounded certification ---------------------------------------------

    def _cert(self, forb: bytes, alice: bool, d: int, key: bytes) -> bool:
        mk = (key, d)
        hit = self._cert_memo.get(mk)
        if hit is not None:
            return hit
        self.nodes += 1
        st = self._status(forb)
        if st is not None:
            res = st is False
        elif alice:
            res = True
            seen = set()
            for child in self.children(forb, True):
                ck = self.key(child, False)
                if ck in seen:
                    continue
                seen.add(ck)
                if not self._cert(child, False, d, ck):
                    res = False
                    break
        elif d <= 0:
            res = False
        elif self._bob_has_kill(forb):
            res = True
        else:
            res = False
            seen = set()
            for child in self.children(forb, False):
                ck = self.key(child, True)
                if ck in seen:
                    continue
                seen.add(ck)
                if self._cert(child, True, d - 1, ck):
                    res = True
                    break
        self._cert_memo[mk] = res
        return res

    def bob_wins_within(self, s: GameState, d: int) -> bool:
        """True only if Bob forces a win using at most ``d`` of his own moves."""
        forb = self.encode(s)
        alice = s.to_move is ALICE
        return self._cert(forb, alice, d, self.key(forb, alice))

    def stats(self) -> SolveStats:
        return SolveStats(self.nodes, len(self.table), self.table.hits, self.table.misses)


def solve(s: GameState, table: Optional[TranspositionTable] = None) -> Verdict:
    return Solver(s.forest, s.ruleset, table).solve(s)


def bob_wins_within(s: GameState, d: int) -> bool:
    return Solver(s.forest, s.ruleset).bob_wins_within(s, d)


def plain_minimax(s: GameState) -> Verdict:
    """Reference search over the public move API: no memo, no pruning beyond short-circuit."""
    v = terminal(s)
    if v is not None:
        return v
    moves = legal_moves(s)
    if not moves:
        raise AssertionError("non-terminal state without moves")
    want = ALICE_WIN if s.to_move is ALICE else BOB_WIN
    for m in moves:
        if plain_minimax(apply_move(s, m)) is want:
            return want
    return BOB_WIN if want is ALICE_WIN else ALICE_WIN


# -- winning moves ----------------------------------------------------------


def _stuck_vertices(s: GameState, p: Position) -> list:
    t = s.ruleset.t
    return [
        v
        for v in p.uncolored_vertices
        if s.ruleset.is_relevant(p.forest, v) and len([c for c in p.forbidden(v) if c < t]) >= t
    ]


def find_winning_moves(s: GameState) -> list:
    """Colorings that would leave some vertex with no legal color, from Bob's side."""
    p = s.position
    out = []
    for v in p.uncolored_vertices:
        for c in p.legal_colors(v, s.ruleset.t):
            if _stuck_vertices(s, p.with_color(v, c)):
                out.append(Move("color", v, c))
    return out


def winning_move_targets(s: GameState, m: Move) -> list:
    return _stuck_vertices(s, s.position.with_color(m.vertex, m.color))


def disjoint_winning_moves(s: GameState, m1: Move, m2: Move) -> bool:
    """Two winning moves are disjoint when their colored vertices are more than 2 apart."""
    try:
        return distance(s.forest, m1.vertex, m2.vertex) > 2
    except DisconnectedError:
        return True


# -- game chromatic number --------------------------------------------------


class ChromaticResult(NamedTuple):
    value: int
    capped: bool


def game_chromatic_number_detail(f: Forest, max_solve: int = 3) -> ChromaticResult:
    """Least t with an Alice win, scanning upward from 0.

    Forests never need more than 4 colors, so a loss at ``max_solve`` colors
    reports 4 without searching (``capped=True``).
    """
    for t in range(max_solve + 1):
        s = GameState.start(f, Ruleset.standard(t))
        if Solver(f, s.ruleset).alice_wins(s):
            return ChromaticResult(t, False)
    return ChromaticResult(4, True)


def game_chromatic_number(f: Forest) -> int:
    return game_chromatic_number_detail(f).value


# -- cache files ------------------------------------------------------------

CACHE_MAGIC = "gamechrom-cache"
CACHE_VERSION = 1


def cache_digest(forest: Forest, ruleset: Ruleset) -> str:
    # keys are positional, so the graph is part of the identity
    payload = f"{ruleset.digest()}|{forest.n}|{forest.sorted_edges()}"
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def save_cache(solver: Solver, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{CACHE_MAGIC} {CACHE_VERSION} {cache_digest(solver.forest, solver.rules)}\n")
        for k in sorted(solver.table.data):
            verdict = ALICE_WIN if solver.table.data[k] else BOB_WIN
            fh.write(f"{k.hex()} {verdict.value}\n")


def load_cache(solver: Solver, path) -> int:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != CACHE_MAGIC or header[1] != str(CACHE_VERSION):
            raise CacheFileError(f"{path}: not a {CACHE_MAGIC} v{CACHE_VERSION} file")
        want = cache_digest(solver.forest, solver.rules)
        if header[2] != want:
            raise CacheFileError(f"{path}: ruleset hash {header[2]} does not match {want}")
        count = 0
        for lineno, line in enumerate(fh, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2 or parts[1] not in (ALICE_WIN.value, BOB_WIN.value):
                raise CacheFileError(f"{path}:{lineno}: malformed record")
            solver.table.publish(bytes.fromhex(parts[0]), parts[1] == ALICE_WIN.value)
            count += 1
    return count
