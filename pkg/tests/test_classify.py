import pytest

from gamechrom.classify import (
    CLOSED_FORM,
    SOLVER,
    THEOREM_CAPPED,
    b_vertex_bruteforce,
    b_vertex_ok,
    b_vertex_search,
    classify,
    classify_no_deg3,
    is_chi_g_2,
)
from gamechrom.constructions import double_star, p4_plus, path, spider, star, t_prime, twelve_vertex_example
from gamechrom.enumeration import forests_of_order, trees_of_order
from gamechrom.forest import Position, build_forest, reduced_graph
from gamechrom.solver import game_chromatic_number


def _union(*parts):
    edges, off = [], 0
    for f in parts:
        edges += [(u + off, v + off) for u, v in f.edges]
        off += f.n
    return build_forest(off, edges)


@pytest.mark.parametrize(
    "f, want",
    [
        (star(5), True),
        (path(3), True),
        (path(4), False),
        (_union(path(4), path(1)), True),
        (_union(p4_plus(), path(1)), False),
        (path(5), False),
        (build_forest(3, []), False),
    ],
)
def test_chi_g_2_examples(f, want):
    assert is_chi_g_2(f)[0] is want


def test_chi_g_2_matches_solver():
    for n in range(10):
        for f in forests_of_order(n):
            assert is_chi_g_2(f)[0] == (game_chromatic_number(f) == 2), f


def test_b_vertex_examples():
    assert b_vertex_search(t_prime()) is None
    assert b_vertex_search(double_star(4, 4)) in (0, 1)
    assert b_vertex_search(_union(star(3), star(3))) is not None
    assert b_vertex_search(twelve_vertex_example()) is None


def test_b_vertex_search_matches_brute_force():
    for n in range(1, 13):
        for f in trees_of_order(n):
            fast, slow = b_vertex_search(f), b_vertex_bruteforce(f)
            assert (fast is None) == (slow is None), f
            if fast is not None:
                assert b_vertex_ok(f, fast)


def test_b_vertex_does_not_depend_on_its_color():
    for f in trees_of_order(9):
        for b in f.vertices:
            verdicts = set()
            for c in range(3):
                rg = reduced_graph(Position(f).with_color(b, c))
                verdicts.add(tuple(sorted((len(r.colored), len(r.e_ggt2())) for r in rg.trunks())))
            assert len(verdicts) == 1


def test_no_deg3_examples():
    assert classify_no_deg3(t_prime()).value == 4
    c = classify_no_deg3(spider(4, 3))
    assert c.value == 3 and b_vertex_ok(spider(4, 3), c.b_vertex)
    assert classify_no_deg3(star(4)).value == 2
    with pytest.raises(ValueError):
        classify_no_deg3(star(3))


def test_classify_examples():
    c = classify(twelve_vertex_example())
    assert c.value == 3 and c.method == CLOSED_FORM and c.b_vertex is None
    assert classify(build_forest(5, [])).value == 1
    assert classify(build_forest(0, [])).value == 0
    assert str(classify(t_prime())) == "4 (closed-form: degree-3-free dichotomy: no b-vertex)"


def test_classify_falls_back_to_the_solver():
    tp = t_prime()
    # two leaves on a leaf of T' create a degree-3 vertex
    f = build_forest(tp.n + 2, sorted(tp.edges) + [(4, tp.n), (4, tp.n + 1)])
    with pytest.raises(LookupError):
        classify(f, allow_solver=False)
    c = classify(f)
    assert c.method in (SOLVER, THEOREM_CAPPED) and c.value == game_chromatic_number(f)


def test_classify_matches_solver_on_small_forests():
    for n in range(10):
        for f in forests_of_order(n):
            assert classify(f, allow_solver=False).value == game_chromatic_number(f), f
    for n in (10, 11):
        for f in trees_of_order(n):
            assert classify(f, allow_solver=False).value == game_chromatic_number(f), f


def test_one_leaf_on_a_leaf_of_t_prime_stays_degree_3_free():
    tp = t_prime()
    f = build_forest(tp.n + 1, sorted(tp.edges) + [(4, tp.n)])
    c = classify(f, allow_solver=False)
    assert c.method == CLOSED_FORM and c.value == game_chromatic_number(f)
