import pytest

from gamechrom.verify import SUITES, Result, default_jobs, run_suite


@pytest.mark.parametrize(
    "name, max_n, count",
    [
        ("thm-gcn2", 6, 1 + 1 + 2 + 3 + 6 + 10 + 20),
        ("thm-u13", 8, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23),
        ("lemma-small-trunk", 5, None),
        ("thm-nodeg3", 9, None),
        ("lemma-gadgets-s4", None, 7),
        ("lemma-gadgets-s8", None, 4),
        ("enumeration-counts", 8, 8 + 9),
    ],
)
def test_every_suite_passes_at_small_scale(name, max_n, count):
    results = list(run_suite(name, max_n, jobs=1))
    assert results and all(isinstance(r, Result) and r.ok for r in results), [r for r in results if not r.ok]
    if count is not None:
        assert len(results) == count
    assert {r.suite for r in results} == {name}


def test_all_suites_are_registered():
    assert set(SUITES) == {
        "thm-gcn2",
        "thm-u13",
        "lemma-small-trunk",
        "thm-nodeg3",
        "lemma-gadgets-s4",
        "lemma-gadgets-s8",
        "enumeration-counts",
    }


def test_worker_count_does_not_change_results():
    one = [(r.instance, r.ok, r.detail) for r in run_suite("thm-nodeg3", 10, jobs=1)]
    three = [(r.instance, r.ok, r.detail) for r in run_suite("thm-nodeg3", 10, jobs=3)]
    assert one == three


def test_guards():
    with pytest.raises(KeyError):
        list(run_suite("nope"))
    with pytest.raises(ValueError, match="long"):
        list(run_suite("thm-u13", 12))
    with pytest.raises(ValueError, match="reference counts"):
        list(run_suite("enumeration-counts", 40))


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("GAMECHROM_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.delenv("GAMECHROM_JOBS")
    assert default_jobs() == 1


def test_result_serializes():
    (r,) = list(run_suite("enumeration-counts", 0))
    assert r.as_dict()["instance"] == "forests n=0" and r.as_dict()["ok"] is True
