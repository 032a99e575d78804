# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Command-Line Drivers."""
import argparse
from dataclasses import asdict
import json
from logging import basicConfig
from logging import getLogger
from logging import INFO
from logging import WARNING
from pathlib import Path
import sys
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from joblib import delayed
from joblib import Parallel
import numpy as np

from ..deligne import lifting_criterion_check
from ..fusion import check_intro_table
from ..fusion import fusion_json
from ..fusion import intro_table
from ..gring import lambda_bijection_check
from ..gring import reduce_compatibility_check
from ..gring import ring_axioms_check
from ..gring import structure_constants_json
from ..modular import check_atypical_comparison
from ..modular import check_even_p
from ..modular import check_typical_comparison
from ..modular import homomorphism_check
from ..modular import s_matrix
from ..modular import s_matrix_float
from ..modular import verlinde_N
from ..qseries import char_bp_product
from ..qseries import char_kw
from ..qseries import char_sigma_w
from ..qseries import final_kw_product
from ..qseries import qh_character_check
from ..qseries import series_denominator
from ..qseries import series_dump
from ..qseries import sigma_relations_check
from ..report import CheckReport
from ..report import jsonable
from ..ribbon import typical_hopf_check
from ..scalars import agrees
from ..scalars import Backend
from .config import RunConfig
from .config import SERIES_NAMES
from .config import TABLE_NAMES


logger = getLogger(__name__)

Result = Tuple[Dict[str, Any], List[CheckReport]]


def run_reports(
    tasks: Sequence[Callable[[], CheckReport]], threads: int = 1
) -> List[CheckReport]:
    """Evaluate independent checks, returning reports in the order of `tasks`."""
    if threads == 1 or len(tasks) == 1:
        return [task() for task in tasks]
    return Parallel(n_jobs=threads, backend="threading")(
        delayed(task)() for task in tasks
    )


def _float_comparison(p: int) -> Tuple[List[List[List[float]]], CheckReport]:
    indices, exact = s_matrix(p)
    _, approx = s_matrix_float(p)
    report = CheckReport(name=f"float_backend[p={p}]")
    for r, a in enumerate(indices):
        for c, b in enumerate(indices):
            report.add(f"{a} {b}", agrees(exact[r, c], approx[r, c]), approx[r, c])
    return _complex_rows(approx), report


def _complex_rows(matrix: np.ndarray) -> List[List[List[float]]]:
    return [[[z.real, z.imag] for z in row] for row in matrix]


def cmd_hopf_table(cfg: RunConfig) -> Result:
    """Atypical and typical Hopf-link tables, each computed along two paths."""
    p = cfg.p
    backend = cfg.backend_kind
    payload: Dict[str, Any] = {"p": p, "backend": cfg.backend, "even": cfg.even}
    tasks: List[Callable[[], CheckReport]] = []
    atypical = p % 2 == 1 or cfg.even
    if atypical and backend != Backend.FLOAT:
        indices, matrix = s_matrix(p)
        payload["index_set"] = [str(x) for x in indices]
        payload["entries"] = [[z.to_json() for z in row] for row in matrix]
        if cfg.even:
            tasks.append(lambda: check_even_p(p))
        else:
            tasks.append(lambda: check_atypical_comparison(p))
    if atypical and backend == Backend.FLOAT:
        indices, approx = s_matrix_float(p)
        payload["index_set"] = [str(x) for x in indices]
        payload["entries_float"] = _complex_rows(approx)
    if backend != Backend.FLOAT:
        tasks.append(
            lambda: check_typical_comparison(
                p,
                size=cfg.sample_size,
                den_bound=cfg.den_bound,
                random_state=cfg.seed,
            )
        )
        tasks.append(
            lambda: typical_hopf_check(
                p,
                den_bound=cfg.den_bound,
                size=cfg.typical_size,
                random_state=cfg.seed,
            )
        )
    reports = run_reports(tasks, cfg.threads)
    if atypical and backend == Backend.BOTH:
        rows, report = _float_comparison(p)
        payload["entries_float"] = rows
        reports.append(report)
    return payload, reports


def cmd_fusion(cfg: RunConfig) -> Result:
    """Listed fusion rules with per-summand braiding data."""
    entries = intro_table(cfg.p)
    payload = {
        "p": cfg.p,
        "table": cfg.table,
        "entries": [
            {
                "rule": e.rule,
                "lhs": str(e.lhs),
                "rhs": str(e.rhs),
                "fusion": fusion_json(e.lhs, e.rhs),
            }
            for e in entries
        ],
    }
    return payload, [check_intro_table(cfg.p)]


def cmd_verlinde(cfg: RunConfig) -> Result:
    """Verlinde tensor for odd p; quadrant table and column homomorphisms for even p."""
    p = cfg.p
    if p % 2 == 0:
        return {"p": p, "even0": True}, [check_even_p(p)]
    constants, report = verlinde_N(p)
    indices, _ = s_matrix(p)
    payload = {
        "p": p,
        "index_set": [str(x) for x in indices],
        "N": constants.tolist(),
    }
    return payload, [report, homomorphism_check(p)]


def cmd_lift(cfg: RunConfig) -> Result:
    report = lifting_criterion_check(
        cfg.p, den_bound=cfg.den_bound, ell_bound=cfg.ell_bound
    )
    payload = {"p": cfg.p, "den_bound": cfg.den_bound, "ell_bound": cfg.ell_bound}
    return payload, [report]


def cmd_gring(cfg: RunConfig) -> Result:
    """Basis, structure constants and ring-axiom checks."""
    p, even0 = cfg.p, cfg.even
    tasks = [
        lambda: ring_axioms_check(p, even0),
        lambda: reduce_compatibility_check(p, even0),
        lambda: lambda_bijection_check(p, even0),
    ]
    return structure_constants_json(p, even0), run_reports(tasks, cfg.threads)


def cmd_qh_char(cfg: RunConfig) -> Result:
    """Reduction character against the B_p product, and the sigma relations."""
    p, order = cfg.p, cfg.order
    tasks = [
        lambda: qh_character_check(p, order),
        lambda: sigma_relations_check(p, order),
    ]
    payload = {
        "p": p,
        "order": order,
        "final_product": str(final_kw_product(p, order)),
    }
    return payload, run_reports(tasks, cfg.threads)


def series_text(cfg: RunConfig) -> str:
    """Dump of the series named by `cfg.series`."""
    p, order = cfg.p, cfg.order
    denom = series_denominator(p)
    if cfg.series == "bp":
        character = char_bp_product(p, order, denom)
    elif cfg.series == "kw":
        character = char_kw(p, order, denom)
    else:
        character = char_sigma_w(
            cfg.s, cfg.s_prime, p, order, denom, x_bound=cfg.x_bound
        )
    return series_dump(character, name=f"{cfg.series} p={p} D={order}")


COMMANDS: Dict[str, Callable[[RunConfig], Result]] = {
    "hopf-table": cmd_hopf_table,
    "fusion": cmd_fusion,
    "verlinde-check": cmd_verlinde,
    "lift-check": cmd_lift,
    "gring": cmd_gring,
    "qh-character-check": cmd_qh_char,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqbench",
        description="exact checks for the unrolled restricted quantum group of sl2.",
    )
    parser.add_argument(
        "command", choices=list(COMMANDS) + ["series-dump"], help="check to run."
    )
    parser.add_argument("--p", type=int, help="order parameter, q = e^{pi i/p}.")
    parser.add_argument("--order", type=int, help="series cutoff D.")
    parser.add_argument(
        "--den-bound", type=int, help="largest denominator of the rational grids."
    )
    parser.add_argument("--ell-bound", type=int, help="largest |l| of the lift grid.")
    parser.add_argument(
        "--backend", choices=["exact", "float", "both"], help="scalar backend."
    )
    parser.add_argument(
        "--even",
        action="store_true",
        default=None,
        help="use the even-part ring (even p).",
    )
    parser.add_argument("--table", choices=list(TABLE_NAMES), help="fusion table.")
    parser.add_argument("--series", choices=list(SERIES_NAMES), help="series to dump.")
    parser.add_argument("--s", type=int, help="s of sigma^{s'}(W_s).")
    parser.add_argument("--s-prime", type=int, help="s' of sigma^{s'}(W_s).")
    parser.add_argument("--seed", type=int, help="random state of sampled grids.")
    parser.add_argument("--out", type=str, help="write the output to this file.")
    parser.add_argument(
        "--pretty",
        action="store_true",
        default=None,
        help="render reports as aligned text instead of JSON.",
    )
    parser.add_argument("--config", type=str, help="alternate YAML defaults file.")
    parser.add_argument("--verbose", action="store_true", help="log progress.")
    return parser


def render(payload: Dict[str, Any], reports: List[CheckReport], pretty: bool) -> str:
    if pretty:
        blocks = []
        for report in reports:
            status = "passed" if report.passed else f"{report.n_failed} failed"
            table = report.summarize().to_string(index=False)
            blocks.append(f"== {report.name} ({status})\n{table}")
        return "\n\n".join(blocks) + "\n"
    document = {
        "config": jsonable(payload),
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    logger.info(f"wrote {out}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; the exit status is 0 iff every check passes."""
    args = build_parser().parse_args(argv)
    basicConfig(level=INFO if args.verbose else WARNING)
    overrides = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "config", "verbose")
    }
    try:
        cfg = RunConfig.from_sources(args.config, overrides)
    except (TypeError, ValueError) as err:
        sys.stderr.write(f"uqbench: {err}\n")
        return 2
    logger.info(f"running {args.command} with {asdict(cfg)}")
    try:
        if args.command == "series-dump":
            _emit(series_text(cfg), cfg.out)
            return 0
        payload, reports = COMMANDS[args.command](cfg)
    except ValueError as err:
        sys.stderr.write(f"uqbench: {err}\n")
        return 2
    _emit(render(payload, reports, cfg.pretty), cfg.out)
    failures = [r for r in reports if not r.passed]
    if failures:
        row = failures[0].first_failure()
        witness = jsonable(row["witness"])
        name = f"{failures[0].name}: {row['check']}"
        sys.stderr.write(f"{name} failed, witness={witness}\n")
        return 1
    return 0
