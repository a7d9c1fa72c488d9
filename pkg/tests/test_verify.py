import json

import pytest

from matrix_ansatz import verify


@pytest.mark.parametrize("suite", sorted(verify.SUITES))
def test_suite_passes_at_default_size(suite):
    rep = verify.run_suite(suite)
    assert rep.n_max == verify.SUITES[suite][1]
    assert rep.checks
    assert rep.passed, [(c.id, c.lhs, c.rhs) for c in rep.checks if c.status != "pass"]


def test_report_is_sorted_and_stable():
    rep = verify.run_suite("counting", 3)
    ids = [c["id"] for c in json.loads(rep.dumps())["checks"]]
    assert ids == sorted(ids)
    assert rep.dumps() == verify.run_suite("counting", 3).dumps()


def test_crashing_check_fails():
    def boom():
        raise RuntimeError("x")

    rep = verify.run_checks("t", 0, iter([("a", boom), ("b", lambda: (1, 1))]))
    assert [c.status for c in rep.checks] == ["fail", "pass"]
    with pytest.raises(ValueError):
        verify.run_checks("t", 0, iter([("a", lambda: (1, 1)), ("a", lambda: (1, 1))]))


def test_all_prefixes_ids():
    rep = verify.run_suite("all", 2)
    assert {c.id.split("/")[0] for c in rep.checks} == set(verify.SUITES)


def test_unknown_suite():
    with pytest.raises(verify.UnknownSuite):
        verify.run_suite("nope")
