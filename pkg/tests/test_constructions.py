import pytest

from gamechrom import constructions as cs
from gamechrom.constructions import (
    CERTIFIED,
    FIG3_SITES,
    Gadget,
    TranscriptionError,
    caterpillar,
    double_star,
    fig3_position,
    glue_at_vertex,
    path,
    spider,
    star,
)
from gamechrom.enumeration import is_isomorphic
from gamechrom.forest import Position, build_forest, longest_path_length


def test_parametric_families():
    assert path(1).n == 1 and not path(1).edges
    assert star(4).degrees == (4, 1, 1, 1, 1)
    assert caterpillar([1, 1]).edges == path(2).edges
    assert sorted(caterpillar([3, 2, 3]).degrees) == [1, 1, 1, 1, 2, 3, 3]
    sp = spider(3, 2)
    assert sp.n == 7 and sp.degrees[0] == 3 and longest_path_length(sp) == 4
    assert double_star(3, 4).degrees[:2] == (3, 4)
    for bad in (lambda: path(0), lambda: star(0), lambda: caterpillar([]), lambda: spider(0, 1), lambda: caterpillar([0, 2])):
        with pytest.raises(ValueError):
            bad()


def test_glue_identifies_one_vertex():
    g = glue_at_vertex(path(3), 0, 3)
    assert is_isomorphic(g.forest, spider(3, 2))
    colored = Position(path(2)).with_color(1, 2)
    glued = glue_at_vertex(colored, 0, 2)
    assert glued.coloring == (None, 2, 2)
    with pytest.raises(ValueError):
        glue_at_vertex(path(2), 0, 0)


def test_glue_degree_and_order():
    f = caterpillar([2, 3, 2])
    for u in f.vertices:
        g = glue_at_vertex(f, u, 3).forest
        assert g.n == 1 + 3 * (f.n - 1)
        assert g.degrees[0] == 3 * f.degrees[u]
        assert g.is_tree()


def test_small_named_graphs():
    p = cs.p4_plus()
    assert p.n == 5 and longest_path_length(p) == 3
    tp = cs.t_prime()
    assert tp.n == 14 and set(tp.degrees) == {1, 4}
    tw = cs.twelve_vertex_example()
    assert tw.n == 12 and tw.is_tree() and 3 in tw.degrees


def test_fig3_positions():
    base = fig3_position()
    assert base.forest.n == 8 and len(base.colored_vertices) == 2
    for site in FIG3_SITES:
        p = fig3_position(site)
        assert p.forest.n == 9 and p.coloring[8] == 1
        (w,) = p.forest.adj[8]
        assert p.forest.degrees[w] == 2
    with pytest.raises(ValueError, match="extra leaf site"):
        fig3_position("x3")


def test_gadget_labels():
    g = cs.t1()
    assert isinstance(g, Gadget)
    assert g.color_of("u") == 0 and g.color_of("v") == 1 and g.color_of("x") is None
    assert g.forest.n == 7


def test_max_degree_3_family_validates():
    suite = cs.section8_suite()
    assert set(suite) == {"t1", "surrounded_p4", "t2", "t3", "t4", "t5", "h", "t_double_prime", "t_max3"}
    assert suite["t_double_prime"].n == 22
    tm = suite["t_max3"]
    assert tm.n == 94 and tm.max_degree == 3 and tm.is_tree()
    assert cs.PROVISIONAL <= set(suite)


def test_validators_reject_bad_transcriptions(monkeypatch):
    good = cs.load("t3.position")
    coloring = list(good.position.coloring)
    coloring[good["y"]] = None
    broken = Gadget("t3", Position(good.forest, tuple(coloring)), good.labels)
    monkeypatch.setattr(cs, "load", lambda name: broken)
    with pytest.raises(TranscriptionError, match="t3"):
        cs.t3()


def test_surrounded_p4_needs_an_even_host(monkeypatch):
    good = cs.load("surrounded_p4.position")
    f = good.forest
    bigger = Position(build_forest(f.n + 1, f.edges | {(9, f.n)}), good.position.coloring + (None,))
    monkeypatch.setattr(cs, "load", lambda name: Gadget(name, bigger, good.labels))
    with pytest.raises(TranscriptionError, match="even"):
        cs.surrounded_p4()


def test_small_gadgets_certify():
    reports = cs.certify_small_gadgets()
    assert [r.name for r in reports] == ["t1", "surrounded_p4"]
    assert all(r.status == CERTIFIED and r.ok for r in reports)


def test_a_broken_gadget_is_reported_not_raised(monkeypatch):
    def broken():
        raise TranscriptionError("t1: synthetic")

    monkeypatch.setattr(cs, "t1", broken)
    (r, _) = cs.certify_small_gadgets()
    assert r.status == cs.TRANSCRIPTION_INVALID and not r.ok and "synthetic" in r.message
