# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Run Configuration."""
from dataclasses import dataclass
from dataclasses import fields
import os
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Optional
from typing import Union

from sklearn.utils import check_scalar
import yaml

from ..scalars import Backend
from ..utils import check_p


default_config_file = Path(__file__).parent / "conf" / "default.yaml"

THREADS_ENV = "WORKBENCH_THREADS"
SERIES_NAMES = ("bp", "kw", "sigma-w")
TABLE_NAMES = ("intro",)


def load_defaults(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """Read a YAML file of run defaults (the packaged file when `path` is None)."""
    with open(path or default_config_file, "rb") as f:
        values = yaml.safe_load(f) or {}
    if not isinstance(values, dict):
        raise ValueError(
            f"config file must hold a mapping, but {type(values)} is given"
        )
    return values


def threads_from_env() -> int:
    value = os.environ.get(THREADS_ENV)
    if value is None:
        return 1
    try:
        threads = int(value)
    except ValueError:
        raise ValueError(
            f"`{THREADS_ENV}` must be an integer, but {value} is given"
        )
    check_scalar(threads, THREADS_ENV, int, min_val=1)
    return threads


@dataclass
class RunConfig:
    """Configuration of one command-line run.

    Parameters
    ----------
    p: int
        Order parameter, q = e^{pi i/p}.

    order: int
        Series cutoff D.

    den_bound: int
        Largest denominator of the rational grids.

    ell_bound: int
        Largest |l| of the lifting grid.

    backend: str
        One of "exact", "float" or "both".

    even: bool
        Work in the even-part ring (even p).

    seed: int
        Random state of the sampled grids.

    """

    p: int = 3
    order: int = 10
    den_bound: int = 4
    ell_bound: int = 2
    backend: str = "exact"
    even: bool = False
    seed: int = 12345
    table: str = "intro"
    sample_size: int = 60
    typical_size: int = 4
    series: str = "bp"
    s: int = 1
    s_prime: int = 0
    x_bound: int = 20
    pretty: bool = False
    out: Optional[str] = None
    threads: int = 1

    def __post_init__(self) -> None:
        check_p(self.p)
        check_scalar(self.order, "order", int, min_val=1)
        check_scalar(self.den_bound, "den_bound", int, min_val=1)
        check_scalar(self.ell_bound, "ell_bound", int, min_val=0)
        check_scalar(self.seed, "seed", int, min_val=0)
        check_scalar(self.sample_size, "sample_size", int, min_val=1)
        check_scalar(self.typical_size, "typical_size", int, min_val=1)
        check_scalar(self.s, "s", int)
        check_scalar(self.s_prime, "s_prime", int)
        check_scalar(self.x_bound, "x_bound", int, min_val=0)
        check_scalar(self.threads, "threads", int, min_val=1)
        Backend.from_name(self.backend)
        if self.series not in SERIES_NAMES:
            raise ValueError(
                f"`series` must be one of {SERIES_NAMES}, but {self.series} is given"
            )
        if self.table not in TABLE_NAMES:
            raise ValueError(
                f"`table` must be one of {TABLE_NAMES}, but {self.table} is given"
            )
        if self.even and self.p % 2:
            raise ValueError(f"`even` needs an even `p`, but {self.p} is given")

    @property
    def backend_kind(self) -> Backend:
        return Backend.from_name(self.backend)

    @classmethod
    def from_sources(
        cls,
        path: Optional[Union[str, Path]] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> "RunConfig":
        """Defaults from YAML, then the thread cap from the environment, then flags.

        Override values that are None are ignored.
        """
        values = load_defaults(path)
        names = {f.name for f in fields(cls)}
        unknown = set(values) - names
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        values["threads"] = threads_from_env()
        for key, value in (overrides or {}).items():
            if key in names and value is not None:
                values[key] = value
        return cls(**values)
