# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Check Reports."""
from dataclasses import dataclass
from dataclasses import field
from logging import getLogger
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

import pandas as pd

from .scalars import CycScalar


logger = getLogger(__name__)


def jsonable(value: Any) -> Any:
    """Convert scalars and containers into JSON-serializable values."""
    if isinstance(value, CycScalar):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


@dataclass
class CheckReport:
    """Outcome of a verification sweep.

    Parameters
    ----------
    name: str
        Name of the sweep (e.g., "typical_comparison").

    rows: list of dict
        One row per check, with keys `check`, `status` and `witness`.

    """

    name: str
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, check: str, status: bool, witness: Optional[Any] = None) -> None:
        """Record one check; failures are logged as warnings."""
        status = bool(status)
        if not status:
            logger.warning(f"{self.name}: {check} failed, witness={witness}")
        self.rows.append({"check": check, "status": status, "witness": witness})

    def extend(self, other: "CheckReport") -> None:
        for row in other.rows:
            self.rows.append(
                {
                    "check": f"{other.name}/{row['check']}",
                    "status": row["status"],
                    "witness": row["witness"],
                }
            )

    @property
    def passed(self) -> bool:
        return all(row["status"] for row in self.rows)

    @property
    def n_failed(self) -> int:
        return sum(not row["status"] for row in self.rows)

    def first_failure(self) -> Optional[Dict[str, Any]]:
        for row in self.rows:
            if not row["status"]:
                return row
        return None

    def summarize(self) -> pd.DataFrame:
        """Summarize the report as a DataFrame with one row per check."""
        return pd.DataFrame(
            [
                {
                    "check": row["check"],
                    "status": "ok" if row["status"] else "FAIL",
                    "witness": "" if row["witness"] is None else str(row["witness"]),
                }
                for row in self.rows
            ],
            columns=["check", "status", "witness"],
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "rows": [
                {
                    "check": row["check"],
                    "status": "ok" if row["status"] else "fail",
                    "witness": jsonable(row["witness"]),
                }
                for row in self.rows
            ],
        }
