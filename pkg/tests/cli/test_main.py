import json
import re

import pytest
import yaml

from uqbench.cli import build_parser
from uqbench.cli import main
from uqbench.cli import run_reports
from uqbench.report import CheckReport


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text(
        yaml.safe_dump({"sample_size": 6, "typical_size": 2, "den_bound": 2})
    )
    return str(path)


def _run(argv, tmp_path):
    out = tmp_path / "out.json"
    code = main(argv + ["--out", str(out)])
    return code, json.loads(out.read_text())


def test_parser():
    args = build_parser().parse_args(["gring", "--p", "5", "--even"])
    assert (args.command, args.p, args.even) == ("gring", 5, True)
    args = build_parser().parse_args(["fusion"])
    assert args.even is None and args.pretty is None
    with pytest.raises(SystemExit):
        build_parser().parse_args(["unknown"])


def test_run_reports_keeps_order():
    def task(name):
        return lambda: CheckReport(name=name)

    tasks = [task(str(k)) for k in range(5)]
    names = [r.name for r in run_reports(tasks, threads=3)]
    assert names == ["0", "1", "2", "3", "4"]


@pytest.mark.parametrize(
    "argv",
    [
        ["gring", "--p", "3"],
        ["gring", "--p", "4", "--even"],
        ["verlinde-check", "--p", "3"],
        ["verlinde-check", "--p", "4"],
        ["lift-check", "--p", "2", "--den-bound", "2", "--ell-bound", "1"],
        ["fusion", "--p", "2"],
        ["qh-character-check", "--p", "3", "--order", "5"],
    ],
)
def test_commands_pass(argv, tmp_path):
    code, document = _run(argv, tmp_path)
    assert code == 0
    assert document["passed"]
    assert all(report["passed"] for report in document["reports"])


@pytest.mark.parametrize("backend", ["exact", "float", "both"])
def test_hopf_table(backend, small_config, tmp_path):
    argv = ["hopf-table", "--p", "3", "--backend", backend, "--config", small_config]
    code, document = _run(argv, tmp_path)
    assert code == 0
    assert len(document["config"]["index_set"]) == 3
    if backend != "exact":
        assert len(document["config"]["entries_float"]) == 3


def test_threads_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("WORKBENCH_THREADS", "2")
    code, document = _run(["gring", "--p", "5"], tmp_path)
    assert code == 0
    assert [r["name"] for r in document["reports"]] == [
        "gring_axioms[p=5,even0=False]",
        "gring_reduce[p=5,even0=False]",
        "gring_lambda[p=5,even0=False]",
    ]


def test_pretty_output(capsys):
    assert main(["fusion", "--p", "2", "--pretty"]) == 0
    assert "== intro_table[p=2] (passed)" in capsys.readouterr().out


def test_listed_scalar_discrepancies_exit_code(capsys):
    assert main(["fusion", "--p", "3", "--pretty"]) == 1
    captured = capsys.readouterr()
    assert "== intro_table[p=3] (18 failed)" in captured.out
    assert "intro_table[p=3]: " in captured.err
    assert re.search(r"witness=(relocated|weight_space_trace)", captured.err)


def test_series_dump(capsys):
    assert main(["series-dump", "--p", "3", "--order", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# bp p=3 D=4"
    assert lines[3] == "q^{0} x^{0} : 1"


def test_series_dump_sigma(capsys):
    argv = ["series-dump", "--series", "sigma-w", "--s", "0", "--order", "4"]
    assert main(argv) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["gring", "--p", "1"],
        ["gring", "--p", "3", "--even"],
        ["series-dump", "--series", "kw", "--p", "2"],
    ],
)
def test_invalid_config_exit_code(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("uqbench: ")
