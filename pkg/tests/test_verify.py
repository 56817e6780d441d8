import json

import pytest

from mahonian.verify import CHECKS, PairReport, check_mahonian_pair, run_check, run_suite


@pytest.mark.parametrize("name", list(CHECKS))
def test_every_check_passes_quick(name):
    report = run_check(name, profile="quick")
    assert report.passed, f"{name}: {report.witness}"
    assert report.check == name
    assert report.millis >= 0


def test_unknown_check():
    with pytest.raises(KeyError):
        run_check("no-such-check")
    with pytest.raises(KeyError):
        run_suite(names=["no-such-check"])


def test_unknown_bound():
    with pytest.raises(KeyError):
        run_check("csv-gk-conjugacy", bounds={"bogus": 3})


def test_bound_override():
    report = run_check("csv-gk-conjugacy", bounds={"max_size": 8})
    assert report.passed
    assert report.params == {"max_size": 8}


def test_empty_suite():
    assert run_suite(names=[]) == []


def test_failing_pair_has_witness():
    # maj over {12} vs inv over {21}: 1 vs q
    ok, witness, left, right = check_mahonian_pair([(1, 2)], [(2, 1)])
    assert not ok
    assert witness is not None and "coefficient" in witness
    assert left == "1" and right == "q"


def test_report_json_schema():
    report = run_check("foata-worked-example")
    data = report.to_json()
    assert set(data) <= {"check", "params", "verdict", "millis", "witness", "note"}
    assert data["check"] == "foata-worked-example"
    assert data["verdict"] == "pass"
    json.dumps(data)  # serializable
    failing = PairReport(check="x", params={}, verdict="fail", witness="w")
    assert failing.to_json()["witness"] == "w"


def test_empirical_checks_flagged():
    defn = CHECKS["fib-dual-mirror"]
    assert not defn.established
    report = run_check("fib-dual-mirror", profile="quick")
    assert report.to_json().get("note")


def test_suite_order_deterministic():
    names = ["macmahon", "foata-worked-example"]
    reports = run_suite(names=names)
    assert [r.check for r in reports] == names


def test_suite_threaded_matches():
    names = list(CHECKS)[:6]
    serial = [r.check for r in run_suite(names=names, threads=1)]
    threaded = [r.check for r in run_suite(names=names, threads=4)]
    assert serial == threaded
