"""Alice's constructive strategies as deterministic policies, and a policy verifier.

Every free choice ("any vertex", "any available color") resolves to the
lowest vertex id and the lowest legal color.
"""

from __future__ import annotations

import sys
from typing import Callable

from .forest import (
    TRIVIALLY_COVERED,
    Position,
    build_forest,
    covering_vertex,
    dangerous_vertices,
    path_between,
    reduced_graph,
    trunks,
)
from .game import (
    ALICE,
    GameState,
    Move,
    Player,
    Ruleset,
    apply_move,
    legal_moves,
    terminal,
)

Policy = Callable[[GameState], Move]


class PolicyError(RuntimeError):
    """A policy was called outside its precondition or produced an illegal move."""


def _lowest_legal(s: GameState, v: int) -> Move:
    cols = s.position.legal_colors(v, s.ruleset.t)
    if not cols:
        raise PolicyError(f"vertex {v} has no legal color")
    return Move("color", v, cols[0])


def _require(s: GameState, ruleset: Ruleset, what: str) -> None:
    if s.ruleset != ruleset:
        raise PolicyError(f"{what} needs ruleset {ruleset}, got {s.ruleset}")
    if s.to_move is not ALICE:
        raise PolicyError(f"{what} is an Alice policy but {s.to_move.value} is to move")


def _median(r, a, b, c) -> int:
    common = set(r.path(a, b)) & set(r.path(b, c)) & set(r.path(a, c))
    (m,) = common
    return m


def alice_4mcg(s: GameState) -> Move:
    """Keep every trunk at no more than two colored vertices."""
    _require(s, Ruleset.mcg(4), "alice_4mcg")
    live = [r for r in trunks(s.position) if r.uncolored]
    if not live:
        raise PolicyError("no trunk has an uncolored vertex")
    if any(len(r.colored) > 3 for r in live):
        raise PolicyError("a trunk has more than 3 colored vertices")
    for r in live:
        if len(r.colored) == 3:
            return _lowest_legal(s, _median(r, *sorted(r.colored)))
    for r in live:
        if len(r.colored) == 2:
            x, y = sorted(r.colored)
            return _lowest_legal(s, min(r.path(x, y)[1:-1]))
    return _lowest_legal(s, live[0].uncolored[0])


def alice_small_trunk_3mcg(s: GameState) -> Move:
    """Three-color play on a tree of at most 7 vertices, driven by its dangerous vertices."""
    _require(s, Ruleset.mcg(3), "alice_small_trunk_3mcg")
    p = s.position
    f = p.forest
    if f.n > 7 or not f.is_tree():
        raise PolicyError("needs a single tree on at most 7 vertices")
    danger = dangerous_vertices(p, 3)
    if len(danger) > 2:
        raise PolicyError(f"{len(danger)} dangerous vertices; at most 2 expected")
    if not danger:
        for v in p.uncolored_vertices:
            if p.legal_colors(v, 3):
                return _lowest_legal(s, v)
        raise PolicyError("no colorable vertex left")
    if len(danger) == 1:
        return _lowest_legal(s, danger[0])

    def colored_nbrs(v):
        return [w for w in f.adj[v] if p.is_colored(w)]

    # case 1: one dangerous vertex is untouched, so defuse the other
    for v in danger:
        if not colored_nbrs(v):
            other = danger[1] if v == danger[0] else danger[0]
            return _lowest_legal(s, other)
    # case 2
    for v in danger:
        if len(colored_nbrs(v)) == 2:
            return _lowest_legal(s, v)
    if any(len(colored_nbrs(v)) != 1 for v in danger):
        raise PolicyError("dangerous vertex with an unexpected number of colored neighbors")
    # case 3: each dangerous vertex has exactly one colored neighbor
    deg3 = [v for v in danger if f.degrees[v] == 3]
    if not deg3:
        raise PolicyError("neither dangerous vertex has degree 3")
    x = deg3[0]
    y = danger[1] if x == danger[0] else danger[0]
    if y not in f.adj[x]:
        return _lowest_legal(s, x)
    (cx,) = colored_nbrs(x)
    for u in f.adj[x]:
        if u == y or p.is_colored(u) or u in f.adj[y]:
            continue
        if any(p.is_colored(w) for w in f.adj[u]):
            continue
        if p.coloring[cx] in p.forbidden(u):
            continue
        return Move("color", u, p.coloring[cx])
    raise PolicyError(f"no neighbor of {x} fits the same-color reply")


def _trunk_ok(r) -> bool:
    k = len(r.colored)
    if k == 1:
        return not r.e_ggt2()
    if k == 0:
        return covering_vertex(r) is not None
    return False


def _without_repeated_leaves(p: Position) -> Position:
    """Drop each edge from an uncolored vertex to a colored neighbor whose color
    a lower-id neighbor already shows; legality is unchanged by this."""
    f = p.forest
    drop = set()
    for u in p.uncolored_vertices:
        seen = set()
        for w in f.adj[u]:
            c = p.coloring[w]
            if c is None:
                continue
            if c in seen:
                drop.add((min(u, w), max(u, w)))
            seen.add(c)
    if not drop:
        return p
    g = build_forest(f.n, [e for e in f.edges if e not in drop])
    return Position(g, p.coloring, p.external)


def alice_rcg(s: GameState) -> Move:
    """Three-color reduced game: restore the safe shape of every reduced trunk."""
    _require(s, Ruleset.rcg(3), "alice_rcg")
    p = s.position
    f = p.forest
    k = s.ruleset.alice_min_degree

    def pick(v, color=None):
        if f.degrees[v] < k:
            raise PolicyError(f"strategy chose vertex {v} of degree below {k}")
        if color is None:
            return _lowest_legal(s, v)
        if color in p.forbidden(v):
            raise PolicyError(f"color {color} is not legal at {v}")
        return Move("color", v, color)

    q = _without_repeated_leaves(p)
    g = q.forest
    rts = reduced_graph(q).trunks()
    bad = [r for r in rts if not _trunk_ok(r)]
    if len(bad) > 1:
        raise PolicyError("more than one reduced trunk is unsafe")
    if bad:
        r = bad[0]
        if len(r.colored) == 2 and not r.e_ggt2():
            x = min(r.colored)
            (xp,) = r.adj[x]
            return pick(xp)
        if len(r.colored) == 1:
            (b,) = r.colored
            edges = r.e_ggt2()
            covers = set(edges[0])
            for e in edges[1:]:
                covers &= set(e)
            if not covers:
                raise PolicyError("unsafe trunk has no covering vertex")
            v = min(covers, key=lambda c: (len(r.path(b, c)), c))
            route = r.path(b, v)
            d = len(route) - 1
            if d == 1:
                return pick(v)
            if d == 2:
                return pick(v, p.coloring[b])
            return pick(route[1])
        raise PolicyError("unsafe trunk outside the strategy's cases")
    # Bob passed or played harmlessly
    for r in rts:
        if r.colored:
            continue
        live = [v for v in r.uncolored if g.degrees[v] >= k]
        if not live:
            continue
        cov = covering_vertex(r)
        return pick(live[0] if cov == TRIVIALLY_COVERED else cov)
    for r in rts:
        if len(r.colored) == 1:
            (x,) = r.colored
            for xp in r.adj[x]:
                if not p.is_colored(xp) and g.degrees[xp] >= k:
                    return pick(xp)
    # what is left can no longer get stuck
    for v in p.uncolored_vertices:
        if f.degrees[v] >= k and p.legal_colors(v, s.ruleset.t):
            return pick(v)
    raise PolicyError("no move fits the strategy")


def _p4_components(f):
    out = []
    for comp in f.components:
        if len(comp) == 4 and all(f.degrees[v] <= 2 for v in comp):
            out.append(comp)
    return out


def alice_2color(s: GameState) -> Move:
    """Two colors: mirror Bob inside path components on 4 vertices, guard stars elsewhere."""
    from .classify import is_chi_g_2

    _require(s, Ruleset.standard(2), "alice_2color")
    p = s.position
    f = p.forest
    if not is_chi_g_2(f)[0]:
        raise PolicyError("forest does not have game chromatic number 2")
    p4s = _p4_components(f)
    in_p4 = {v for comp in p4s for v in comp}
    for comp in p4s:
        col = [v for v in comp if p.is_colored(v)]
        if len(col) == 1:
            (v,) = col
            ends = [w for w in comp if f.degrees[w] == 1]
            order = path_between(f, ends[0], ends[1])
            i = order.index(v)
            j = i + 2 if i + 2 < 4 else i - 2
            return Move("color", order[j], p.coloring[v])
    rest = [v for v in p.uncolored_vertices if v not in in_p4]
    danger = [v for v in dangerous_vertices(p, 2) if v not in in_p4]
    for v in danger:
        if any(p.is_colored(w) for w in f.adj[v]):
            return _lowest_legal(s, v)
    if danger:
        return _lowest_legal(s, danger[0])
    for v in rest:
        if p.legal_colors(v, 2):
            return _lowest_legal(s, v)
    # only untouched 4-paths remain; parity should have prevented this
    for v in p.uncolored_vertices:
        if p.legal_colors(v, 2):
            return _lowest_legal(s, v)
    raise PolicyError("no colorable vertex left")


def _safe(s: GameState) -> bool:
    """Every required uncolored vertex keeps a legal color whatever happens next."""
    p, rules = s.position, s.ruleset
    f = p.forest
    for v in p.uncolored_vertices:
        if not rules.is_relevant(f, v):
            continue
        unc = sum(1 for w in f.adj[v] if not p.is_colored(w))
        if len(p.forbidden(v)) + unc >= rules.t:
            return False
    return True


def verify_policy(policy: Policy, s: GameState, side: Player = ALICE, prune_safe: bool = True) -> bool:
    """True iff ``policy`` playing ``side`` wins against every opponent line.

    Results are memoized on the exact state, since a policy need not treat
    color-permuted states alike. With ``prune_safe`` the search stops once
    Alice can no longer lose, which skips checking the policy beyond that.
    """
    memo: dict = {}
    need = 6 * (s.forest.n + 4) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)

    def rec(st: GameState) -> bool:
        key = (st.position.coloring, st.position.external, st.to_move)
        if key in memo:
            return memo[key]
        v = terminal(st)
        if v is not None:
            res = v.winner is side
        elif prune_safe and side is ALICE and _safe(st):
            res = True
        elif st.to_move is side:
            m = policy(st)
            if m not in legal_moves(st):
                raise PolicyError(f"policy returned illegal move {m} at state {st.position}")
            res = rec(apply_move(st, m))
        else:
            res = all(rec(apply_move(st, m)) for m in legal_moves(st))
        memo[key] = res
        return res

    return rec(s)
