"""Rulesets, moves and state transitions for the vertex coloring game and its variants."""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .forest import Forest, Position


class Player(enum.Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class Verdict(enum.Enum):
    ALICE_WIN = "AliceWin"
    BOB_WIN = "BobWin"

    @property
    def winner(self) -> Player:
        return Player.ALICE if self is Verdict.ALICE_WIN else Player.BOB


ALICE, BOB = Player.ALICE, Player.BOB
ALICE_WIN, BOB_WIN = Verdict.ALICE_WIN, Verdict.BOB_WIN


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True)
class Ruleset:
    """Game variant configuration.

    ``win_min_degree`` is ``None`` for the usual "everything colored" goal;
    an integer k means Alice wins once every vertex of degree >= k is colored
    and only those vertices can leave Bob a stuck vertex.
    """

    t: int
    first_mover: Player = ALICE
    alice_may_pass: bool = False
    alice_may_add_leaf: bool = False
    bob_may_pass: bool = False
    alice_min_degree: Optional[int] = None
    win_min_degree: Optional[int] = None

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("palette size must be non-negative")
        if self.alice_may_add_leaf and not self.alice_may_pass:
            raise ValueError("leaf additions replace a pass; alice_may_pass is required")
        if self.alice_may_pass and self.bob_may_pass:
            # mutual passing would allow infinite play
            raise ValueError("at most one side may pass")

    @classmethod
    def standard(cls, t: int) -> "Ruleset":
        return cls(t)

    @classmethod
    def mcg(cls, t: int) -> "Ruleset":
        return cls(t, first_mover=BOB, bob_may_pass=True)

    @classmethod
    def ecg(cls, t: int) -> "Ruleset":
        return cls(t, alice_may_pass=True, alice_may_add_leaf=True)

    @classmethod
    def rcg(cls, t: int, k: int = 3) -> "Ruleset":
        return cls(t, first_mover=BOB, bob_may_pass=True, alice_min_degree=k, win_min_degree=k)

    @classmethod
    def named(cls, name: str, t: int, k: int = 3) -> "Ruleset":
        makers = {"std": cls.standard, "mcg": cls.mcg, "ecg": cls.ecg}
        if name == "rcg":
            return cls.rcg(t, k)
        if name not in makers:
            raise ValueError(f"unknown ruleset {name!r}")
        return makers[name](t)

    @property
    def name(self) -> str:
        for tag in ("std", "mcg", "ecg"):
            if self == Ruleset.named(tag, self.t):
                return tag
        if self.win_min_degree is not None and self == Ruleset.rcg(self.t, self.win_min_degree):
            return "rcg"
        return "custom"

    def digest(self) -> str:
        fields = (
            self.t,
            self.first_mover.value,
            self.alice_may_pass,
            self.alice_may_add_leaf,
            self.bob_may_pass,
            self.alice_min_degree,
            self.win_min_degree,
        )
        return hashlib.sha256(repr(fields).encode()).hexdigest()[:16]

    def is_relevant(self, forest: Forest, v: int) -> bool:
        return self.win_min_degree is None or forest.degrees[v] >= self.win_min_degree


@dataclass(frozen=True, order=True)
class Move:
    """``kind`` is one of ``"color"``, ``"pass"``, ``"external"``."""

    kind: str
    vertex: int = -1
    color: int = -1

    def __str__(self):
        if self.kind == "pass":
            return "Pass"
        tag = "ColorVertex" if self.kind == "color" else "AddExternal"
        return f"{tag}({self.vertex}, {self.color})"


def ColorVertex(v: int, c: int) -> Move:
    return Move("color", v, c)


def AddExternal(v: int, c: int) -> Move:
    return Move("external", v, c)


PASS = Move("pass")


@dataclass(frozen=True)
class GameState:
    position: Position
    to_move: Player
    ruleset: Ruleset

    def __post_init__(self):
        t = self.ruleset.t
        if self.position.max_color() >= t:
            raise ValueError(f"position uses a color outside the palette of size {t}")

    @classmethod
    def start(cls, forest_or_position, ruleset: Ruleset) -> "GameState":
        p = forest_or_position
        if isinstance(p, Forest):
            p = Position(p)
        return cls(p, ruleset.first_mover, ruleset)

    @property
    def forest(self) -> Forest:
        return self.position.forest


def legal_moves(s: GameState) -> list:
    p, rules = s.position, s.ruleset
    f = p.forest
    t = rules.t
    moves = []
    alice = s.to_move is ALICE
    for v in p.uncolored_vertices:
        if alice and rules.alice_min_degree is not None and f.degrees[v] < rules.alice_min_degree:
            continue
        bad = p.forbidden(v)
        moves.extend(ColorVertex(v, c) for c in range(t) if c not in bad)
    if alice and rules.alice_may_pass or not alice and rules.bob_may_pass:
        moves.append(PASS)
    if alice and rules.alice_may_add_leaf:
        for v in p.uncolored_vertices:
            moves.extend(AddExternal(v, c) for c in range(t) if c not in p.external[v])
    return moves


def _check_move(s: GameState, m: Move) -> None:
    p, rules = s.position, s.ruleset
    alice = s.to_move is ALICE
    if m.kind == "pass":
        if not (rules.alice_may_pass if alice else rules.bob_may_pass):
            raise IllegalMoveError(f"{s.to_move.value} may not pass under this ruleset")
        return
    v, c = m.vertex, m.color
    if not 0 <= v < p.forest.n:
        raise IllegalMoveError(f"vertex {v} does not exist")
    if not 0 <= c < rules.t:
        raise IllegalMoveError(f"color {c} is outside the palette")
    if p.is_colored(v):
        raise IllegalMoveError(f"vertex {v} is already colored")
    if m.kind == "external":
        if not (alice and rules.alice_may_add_leaf):
            raise IllegalMoveError("leaf additions are Alice-only and need alice_may_add_leaf")
        if c in p.external[v]:
            raise IllegalMoveError(f"vertex {v} already carries an external leaf of color {c}")
        return
    if m.kind != "color":
        raise IllegalMoveError(f"unknown move kind {m.kind!r}")
    if alice and rules.alice_min_degree is not None and p.forest.degrees[v] < rules.alice_min_degree:
        raise IllegalMoveError(f"Alice may only color vertices of degree >= {rules.alice_min_degree}")
    if c in p.forbidden(v):
        raise IllegalMoveError(f"color {c} is not legal at vertex {v}")


def apply_move(s: GameState, m: Move) -> GameState:
    _check_move(s, m)
    p = s.position
    if m.kind == "color":
        p = p.with_color(m.vertex, m.color)
    elif m.kind == "external":
        p = p.with_external(m.vertex, m.color)
    return GameState(p, s.to_move.other, s.ruleset)


def terminal(s: GameState) -> Optional[Verdict]:
    p, rules = s.position, s.ruleset
    f = p.forest
    t = rules.t
    open_relevant = False
    for v in p.uncolored_vertices:
        if not rules.is_relevant(f, v):
            continue
        open_relevant = True
        if len([c for c in p.forbidden(v) if c < t]) >= t:
            return BOB_WIN
    return None if open_relevant else ALICE_WIN


def _relabel(seq_colors, seq_ext, perm):
    cols = tuple(-1 if c is None else perm[c] for c in seq_colors)
    ext = tuple(tuple(sorted(perm[c] for c in e)) for e in seq_ext)
    return cols, ext


def canonical_key(s: GameState) -> tuple:
    """Key invariant under palette permutations.

    Vertex colors are relabelled by first occurrence in ascending vertex
    order; colors only seen on external leaves are then fixed by the
    lexicographically least relabelling of the external sets.
    """
    p = s.position
    t = s.ruleset.t
    first = {}
    for c in p.coloring:
        if c is not None and c not in first:
            first[c] = len(first)
    rest = [c for c in range(t) if c not in first]
    best = None
    for tail in permutations(range(len(first), t)):
        perm = dict(first)
        perm.update(zip(rest, tail))
        cand = _relabel(p.coloring, p.external, perm)
        if best is None or cand < best:
            best = cand
    return (s.to_move.value, s.ruleset.digest(), best)


def permute_state(s: GameState, perm) -> GameState:
    p = s.position
    coloring = tuple(None if c is None else perm[c] for c in p.coloring)
    external = tuple(frozenset(perm[c] for c in e) for e in p.external)
    return GameState(Position(p.forest, coloring, external), s.to_move, s.ruleset)
