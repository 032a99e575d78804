from uqbench.cli.config import load_defaults
from uqbench.cli.config import RunConfig
from uqbench.cli.config import threads_from_env
from uqbench.cli.main import build_parser
from uqbench.cli.main import main
from uqbench.cli.main import run_reports


__all__ = [
    "load_defaults",
    "RunConfig",
    "threads_from_env",
    "build_parser",
    "main",
    "run_reports",
]
