import pytest
from hypothesis import given, settings, strategies as st

from gamechrom.constructions import path, star
from gamechrom.forest import Position, build_forest
from gamechrom.game import (
    ALICE,
    ALICE_WIN,
    BOB,
    BOB_WIN,
    PASS,
    AddExternal,
    ColorVertex,
    GameState,
    IllegalMoveError,
    Ruleset,
    apply_move,
    canonical_key,
    legal_moves,
    permute_state,
    terminal,
)


def test_ruleset_variants():
    std = Ruleset.standard(3)
    assert std.first_mover is ALICE and not (std.alice_may_pass or std.bob_may_pass)
    mcg = Ruleset.mcg(3)
    assert mcg.first_mover is BOB and mcg.bob_may_pass
    ecg = Ruleset.ecg(3)
    assert ecg.alice_may_pass and ecg.alice_may_add_leaf and ecg.first_mover is ALICE
    rcg = Ruleset.rcg(3)
    assert rcg.alice_min_degree == rcg.win_min_degree == 3 and rcg.bob_may_pass
    assert {r.name for r in (std, mcg, ecg, rcg)} == {"std", "mcg", "ecg", "rcg"}
    assert len({r.digest() for r in (std, mcg, ecg, rcg, Ruleset.standard(2))}) == 5


def test_ruleset_rejects_inconsistent_flags():
    with pytest.raises(ValueError):
        Ruleset(3, alice_may_add_leaf=True)
    with pytest.raises(ValueError):
        Ruleset(3, alice_may_pass=True, bob_may_pass=True)
    with pytest.raises(ValueError):
        Ruleset.named("nope", 3)


def test_legal_moves_examples():
    s = GameState.start(path(2), Ruleset.standard(2))
    assert len(legal_moves(s)) == 4
    p3 = Position(path(3)).with_color(1, 0)
    assert legal_moves(GameState(p3, ALICE, Ruleset.standard(1))) == []
    k1 = GameState.start(build_forest(1, []), Ruleset.mcg(2))
    assert set(legal_moves(k1)) == {PASS, ColorVertex(0, 0), ColorVertex(0, 1)}


def test_legal_moves_are_unique_and_respect_degree_threshold():
    s = GameState(Position(star(4)), ALICE, Ruleset.rcg(3))
    moves = legal_moves(s)
    assert len(moves) == len(set(moves))
    assert {m.vertex for m in moves if m.kind == "color"} == {0}
    s = GameState.start(path(2), Ruleset.ecg(2))
    moves = legal_moves(s)
    assert AddExternal(0, 1) in moves and PASS in moves and len(moves) == len(set(moves))


def test_apply_move():
    s = GameState.start(path(2), Ruleset.ecg(2))
    s1 = apply_move(s, ColorVertex(0, 1))
    assert s1.position.coloring == (1, None) and s1.to_move is BOB
    assert s.position.coloring == (None, None)
    s2 = apply_move(s, AddExternal(1, 0))
    with pytest.raises(IllegalMoveError, match="already carries"):
        apply_move(GameState(s2.position, ALICE, s2.ruleset), AddExternal(1, 0))
    s3 = apply_move(s, PASS)
    assert s3.position == s.position and s3.to_move is BOB


@pytest.mark.parametrize(
    "state, move, msg",
    [
        (GameState.start(path(2), Ruleset.standard(2)), PASS, "may not pass"),
        (GameState.start(path(2), Ruleset.standard(2)), ColorVertex(0, 2), "outside the palette"),
        (GameState.start(path(2), Ruleset.standard(2)), AddExternal(0, 0), "Alice-only"),
        (GameState(Position(star(3)), ALICE, Ruleset.rcg(3)), ColorVertex(1, 0), "degree >= 3"),
        (GameState(Position(path(2), (0, None)), BOB, Ruleset.standard(2)), ColorVertex(1, 0), "not legal"),
        (GameState(Position(path(2), (0, None)), BOB, Ruleset.standard(2)), ColorVertex(0, 1), "already colored"),
    ],
)
def test_illegal_moves_name_the_rule(state, move, msg):
    with pytest.raises(IllegalMoveError, match=msg):
        apply_move(state, move)


def test_terminal_examples():
    p2 = GameState(Position(path(2), (0, None)), BOB, Ruleset.standard(1))
    assert terminal(p2) is BOB_WIN
    full = GameState(Position(path(3), (0, 1, 0)), BOB, Ruleset.standard(2))
    assert terminal(full) is ALICE_WIN
    k14 = GameState(Position(star(4)).with_color(0, 0), BOB, Ruleset.rcg(3))
    assert terminal(k14) is ALICE_WIN
    assert terminal(GameState.start(path(3), Ruleset.standard(2))) is None


def test_canonical_key_examples():
    f = path(4)
    s = GameState(Position(f, (0, None, None, 1)), ALICE, Ruleset.standard(3))
    swapped = permute_state(s, {0: 1, 1: 0, 2: 2})
    assert canonical_key(s) == canonical_key(swapped)
    assert canonical_key(s) != canonical_key(GameState(s.position, BOB, s.ruleset))
    e1 = GameState(s.position.with_external(1, 2), ALICE, Ruleset.ecg(3))
    e2 = GameState(s.position.with_external(2, 2), ALICE, Ruleset.ecg(3))
    assert canonical_key(e1) != canonical_key(e2)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_canonical_key_is_palette_invariant(data):
    t = data.draw(st.integers(1, 4))
    f = path(5)
    p = Position(f)
    for v in f.vertices:
        if data.draw(st.booleans()):
            cols = p.legal_colors(v, t)
            if cols:
                p = p.with_color(v, data.draw(st.sampled_from(cols)))
        elif data.draw(st.booleans()) and not p.is_colored(v):
            p = p.with_external(v, data.draw(st.integers(0, t - 1)))
    s = GameState(p, data.draw(st.sampled_from([ALICE, BOB])), Ruleset.ecg(t))
    perm = dict(enumerate(data.draw(st.permutations(range(t)))))
    assert canonical_key(s) == canonical_key(permute_state(s, perm))


def test_canonical_key_separates_genuinely_different_states():
    f = path(3)
    keys = set()
    for cols in [(0, None, None), (None, 0, None), (0, None, 0), (0, None, 1)]:
        keys.add(canonical_key(GameState(Position(f, cols), ALICE, Ruleset.standard(3))))
    assert len(keys) == 4
