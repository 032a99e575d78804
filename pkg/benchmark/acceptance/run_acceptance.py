from logging import getLogger
from pathlib import Path
import time
from typing import Dict
from typing import List

import hydra
import numpy as np
from omegaconf import DictConfig
from pandas import DataFrame

from uqbench.cli.config import RunConfig
from uqbench.cli.main import COMMANDS


logger = getLogger(__name__)


def settings_for(command: str, p: int) -> List[Dict[str, bool]]:
    """Flag sets to run `command` with; `fusion` is only tabulated at p=2 and p=3."""
    if command == "fusion" and p not in (2, 3):
        return []
    if command == "gring" and p % 2 == 0:
        return [dict(even=False), dict(even=True)]
    return [dict()]


@hydra.main(config_path="./conf", config_name="config")
def main(cfg: DictConfig) -> None:
    print(cfg)
    logger.info(f"The current working directory is {Path().cwd()}")
    start_time = time.time()

    # configurations
    p_values = list(cfg.setting.p_values)
    base = dict(
        order=cfg.setting.order,
        den_bound=cfg.setting.den_bound,
        ell_bound=cfg.setting.ell_bound,
        sample_size=cfg.setting.sample_size,
        typical_size=cfg.setting.typical_size,
        backend=cfg.setting.backend,
        threads=cfg.setting.threads,
        seed=cfg.setting.random_state,
    )

    rows = []
    for p in p_values:
        for command, run in COMMANDS.items():
            for extra in settings_for(command, p):
                run_cfg = RunConfig(p=p, **base, **extra)
                label = command + (" --even" if run_cfg.even else "")
                tic = time.time()
                _, reports = run(run_cfg)
                elapsed = time.time() - tic
                for report in reports:
                    rows.append(
                        dict(
                            p=p,
                            command=label,
                            report=report.name,
                            n_checks=len(report.rows),
                            n_failed=report.n_failed,
                            passed=report.passed,
                            seconds=np.round(elapsed, 3),
                        )
                    )
                logger.info(f"p={p} {label} finished in {elapsed:.2f}s")

    # save results of the acceptance run
    log_path = Path("./outputs")
    log_path.mkdir(exist_ok=True, parents=True)
    result_df = DataFrame(rows)
    result_df.to_csv(log_path / "acceptance.csv")
    # print result
    print(result_df)
    n_failed = int((~result_df["passed"]).sum())
    elapsed_time = np.round((time.time() - start_time) / 60, 2)
    logger.info(f"finish acceptance run in {elapsed_time}min, {n_failed} failed")


if __name__ == "__main__":
    main()
