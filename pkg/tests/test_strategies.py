import pytest

from gamechrom.classify import b_vertex_ok, is_chi_g_2
from gamechrom.constructions import double_star, path, spider
from gamechrom.enumeration import forests_of_order, trees_of_order
from gamechrom.forest import Position, build_forest, reduced_graph
from gamechrom.game import ALICE, ALICE_WIN, BOB, GameState, Move, Ruleset, apply_move, legal_moves, terminal
from gamechrom.solver import solve
from gamechrom.strategies import (
    PolicyError,
    alice_2color,
    alice_4mcg,
    alice_rcg,
    alice_small_trunk_3mcg,
    verify_policy,
)


def _at(f, colors, rules, to_move=ALICE):
    p = Position(f)
    for v, c in colors.items():
        p = p.with_color(v, c)
    return GameState(p, to_move, rules)


# -- four colors -----------------------------------------------------------


def test_4mcg_separates_three_colored_leaves():
    s = _at(spider(3, 2), {2: 0, 4: 1, 6: 2}, Ruleset.mcg(4))
    assert alice_4mcg(s) == Move("color", 0, 0)


def test_4mcg_plays_inside_a_two_colored_path():
    s = _at(path(5), {0: 0, 4: 1}, Ruleset.mcg(4))
    assert alice_4mcg(s) == Move("color", 1, 1)


def test_4mcg_rejects_a_finished_game():
    with pytest.raises(PolicyError):
        alice_4mcg(_at(path(2), {0: 0, 1: 1}, Ruleset.mcg(4)))


def test_4mcg_wins_on_small_trees_with_colored_leaves():
    rules = Ruleset.mcg(4)
    count = 0
    for n in range(1, 8):
        for f in trees_of_order(n):
            leaves = [v for v in f.vertices if f.degrees[v] == 1] if n > 1 else []
            starts = [{}] + [{a: 0} for a in leaves]
            starts += [{a: 0, b: c} for i, a in enumerate(leaves) for b in leaves[i + 1 :] for c in (0, 1)
                       if c or b not in f.adj[a]]
            for colors in starts:
                s = _at(f, colors, rules, BOB)
                assert verify_policy(alice_4mcg, s, prune_safe=False)
                count += 1
    assert count > 200


# -- small trunks, three colors ----------------------------------------------


def test_small_trunk_without_dangerous_vertices_plays_lowest():
    s = _at(path(4), {0: 0}, Ruleset.mcg(3))
    assert alice_small_trunk_3mcg(s) == Move("color", 1, 1)


def test_small_trunk_case_one_and_two():
    f = build_forest(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6)])
    # vertex 4 has no colored neighbor, so Alice defuses 0
    assert alice_small_trunk_3mcg(_at(f, {1: 0, 2: 1}, Ruleset.mcg(3))).vertex == 0
    # both dangerous vertices touch colors; 0 sees two of them
    assert alice_small_trunk_3mcg(_at(f, {1: 0, 2: 1, 5: 0}, Ruleset.mcg(3))) == Move("color", 0, 2)


def test_small_trunk_case_three_same_color_reply():
    f = build_forest(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    s = _at(f, {2: 0, 4: 1}, Ruleset.mcg(3))
    assert alice_small_trunk_3mcg(s) == Move("color", 3, 0)


def test_small_trunk_rejects_large_trees():
    with pytest.raises(PolicyError):
        alice_small_trunk_3mcg(GameState(Position(path(8)), ALICE, Ruleset.mcg(3)))


def test_small_trunk_policy_wins_every_small_case():
    rules = Ruleset.mcg(3)
    for n in range(1, 8):
        for f in trees_of_order(n):
            starts = [None] + [v for v in f.vertices if f.degrees[v] == 1]
            for leaf in starts:
                s = _at(f, {} if leaf is None else {leaf: 0}, rules, BOB)
                assert verify_policy(alice_small_trunk_3mcg, s, prune_safe=False)


# -- reduced game ----------------------------------------------------------------


def test_rcg_colors_the_cover_after_a_pass():
    s = GameState(Position(double_star(4, 4)), ALICE, Ruleset.rcg(3))
    assert alice_rcg(s) == Move("color", 0, 0)


def test_rcg_same_color_reply_at_distance_two():
    f = build_forest(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7)])
    s = _at(f, {4: 1}, Ruleset.rcg(3))
    assert alice_rcg(s) == Move("color", 0, 1)


def test_rcg_cuts_toward_a_distant_cover():
    f = build_forest(9, [(0, 1), (0, 2), (2, 3), (3, 4), (3, 5), (0, 6), (1, 7), (1, 8)])
    s = _at(f, {4: 0}, Ruleset.rcg(3))
    assert alice_rcg(s).vertex == 3


def _rcg_instances(max_n):
    rules = Ruleset.rcg(3)
    for n in range(1, max_n + 1):
        for f in trees_of_order(n):
            for b in f.vertices:
                if b_vertex_ok(f, b):
                    rg = reduced_graph(Position(f).with_color(b, 0))
                    yield GameState(rg.position, BOB, rules)


def test_rcg_policy_wins_from_every_safe_reduced_graph():
    count = 0
    for s in _rcg_instances(9):
        assert verify_policy(alice_rcg, s)
        assert solve(s) is ALICE_WIN
        count += 1
    assert count > 300


# -- two colors ------------------------------------------------------------------


def test_2color_mirrors_inside_a_four_path():
    f = build_forest(5, [(0, 1), (1, 2), (2, 3)])
    assert alice_2color(_at(f, {0: 0}, Ruleset.standard(2))) == Move("color", 2, 0)


def test_2color_guards_a_star_center():
    f = build_forest(6, [(0, 1), (0, 2), (0, 3), (4, 5)])
    assert alice_2color(_at(f, {1: 0}, Ruleset.standard(2))) == Move("color", 0, 1)
    assert alice_2color(GameState.start(f, Ruleset.standard(2))).vertex == 0


def test_2color_rejects_forests_outside_the_condition():
    with pytest.raises(PolicyError):
        alice_2color(GameState.start(path(5), Ruleset.standard(2)))


def test_2color_policy_wins_on_every_qualifying_forest():
    rules = Ruleset.standard(2)
    for n in range(1, 8):
        for f in forests_of_order(n):
            if is_chi_g_2(f)[0]:
                assert verify_policy(alice_2color, GameState.start(f, rules), prune_safe=False)


# -- the verifier itself ---------------------------------------------------------


def test_naive_policy_loses():
    def lowest_zero(s):
        v = s.position.uncolored_vertices[0]
        return Move("color", v, 0)

    assert not verify_policy(lowest_zero, GameState.start(path(2), Ruleset.standard(1)))


def test_verifier_names_illegal_moves():
    def bad(s):
        return Move("color", 0, 0)

    s = GameState(Position(path(3), (None, 0, None)), ALICE, Ruleset.standard(3))
    with pytest.raises(PolicyError, match="illegal move"):
        verify_policy(bad, s, prune_safe=False)


def test_policies_only_return_legal_moves():
    seen = 0
    for s in _rcg_instances(7):
        for m in legal_moves(s):
            nxt = apply_move(s, m)
            if terminal(nxt) is None:
                assert alice_rcg(nxt) in legal_moves(nxt)
                seen += 1
    assert seen > 0
