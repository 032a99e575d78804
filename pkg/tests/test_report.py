import json

from uqbench.report import CheckReport
from uqbench.report import jsonable
from uqbench.scalars import qint


def test_check_report_rows():
    report = CheckReport(name="demo")
    report.add("first", True)
    assert report.passed
    report.add("second", False, {"value": qint(2, 3)})
    report.add("third", False, [1, 2])
    assert not report.passed
    assert report.n_failed == 2
    assert report.first_failure()["check"] == "second"


def test_check_report_extend():
    inner = CheckReport(name="inner")
    inner.add("a", True, 1)
    outer = CheckReport(name="outer")
    outer.extend(inner)
    assert outer.rows[0]["check"] == "inner/a"
    assert outer.passed


def test_summarize_and_json():
    report = CheckReport(name="demo")
    report.add("ok row", True)
    report.add("bad row", False, qint(2, 5))
    summary = report.summarize()
    assert list(summary.columns) == ["check", "status", "witness"]
    assert list(summary["status"]) == ["ok", "FAIL"]
    payload = report.to_json()
    assert payload["passed"] is False
    assert payload["rows"][1]["witness"]["conductor"] == 10
    json.dumps(payload)


def test_jsonable():
    assert jsonable({1: (2, "x")}) == {"1": [2, "x"]}
    assert jsonable(None) is None
    assert jsonable(complex(1, 2)) == "(1+2j)"
