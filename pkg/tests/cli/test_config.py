import pytest
import yaml

from uqbench.cli import load_defaults
from uqbench.cli import RunConfig
from uqbench.cli import threads_from_env
from uqbench.scalars import Backend


def test_packaged_defaults():
    values = load_defaults()
    assert values["p"] == 3
    cfg = RunConfig(**values)
    assert cfg.backend_kind == Backend.EXACT


# kwargs, err, description
invalid_input_of_run_config = [
    (dict(p=1), ValueError, "p"),
    (dict(p=2.5), TypeError, "p"),
    (dict(order=0), ValueError, "order"),
    (dict(threads=0), ValueError, "threads"),
    (dict(backend="gpu"), ValueError, "`backend` must be one of"),
    (dict(series="x"), ValueError, "`series` must be one of"),
    (dict(table="x"), ValueError, "`table` must be one of"),
    (dict(p=3, even=True), ValueError, "`even` needs an even `p`"),
]


@pytest.mark.parametrize("kwargs, err, description", invalid_input_of_run_config)
def test_run_config_using_invalid_input(kwargs, err, description):
    with pytest.raises(err, match=f"{description}*"):
        RunConfig(**kwargs)


def test_from_sources_layers(tmp_path, monkeypatch):
    path = tmp_path / "conf.yaml"
    path.write_text(yaml.safe_dump({"p": 5, "order": 4}))
    monkeypatch.setenv("WORKBENCH_THREADS", "2")
    cfg = RunConfig.from_sources(path, {"order": 7, "seed": None})
    assert (cfg.p, cfg.order, cfg.seed, cfg.threads) == (5, 7, 12345, 2)


def test_from_sources_rejects_unknown_keys(tmp_path):
    path = tmp_path / "conf.yaml"
    path.write_text(yaml.safe_dump({"q": 5}))
    with pytest.raises(ValueError, match="unknown config keys"):
        RunConfig.from_sources(path)


def test_threads_from_env(monkeypatch):
    monkeypatch.delenv("WORKBENCH_THREADS", raising=False)
    assert threads_from_env() == 1
    monkeypatch.setenv("WORKBENCH_THREADS", "4")
    assert threads_from_env() == 4
    monkeypatch.setenv("WORKBENCH_THREADS", "many")
    with pytest.raises(ValueError, match="must be an integer"):
        threads_from_env()
    monkeypatch.setenv("WORKBENCH_THREADS", "0")
    with pytest.raises(ValueError):
        threads_from_env()
