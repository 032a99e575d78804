# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Orthogonality and Abel Regularization of the Typical S-Transform."""
from fractions import Fraction
from logging import getLogger
import math
from typing import List
from typing import Optional
from typing import Sequence

import numpy as np
from sklearn.utils import check_scalar

from ..report import CheckReport
from ..scalars import agrees
from ..scalars import CycScalar
from ..scalars import RootExp
from ..types import Rational
from ..utils import check_p
from ..utils import check_rational
from ..utils import rational_grid
from .typical import s_chi_unit_typical


logger = getLogger(__name__)


def orthogonality_value(ell: Rational, m: Rational) -> CycScalar:
    """(1/2) int_{-1}^{1} e^{pi i nu' (m - l)} d nu' for integral m - l.

    The antiderivative gives (e^{pi i d} - e^{-pi i d}) / (2 pi i d) with
    d = m - l, whose numerator vanishes exactly when d is a nonzero integer.
    """
    d = check_rational(m, "m") - check_rational(ell, "ell")
    if d.denominator != 1:
        raise ValueError(f"`m - ell` must be an integer, but {d} is given")
    if d == 0:
        return CycScalar.one()
    numerator = RootExp(d).to_cyc() - RootExp(-d).to_cyc()
    if not numerator.is_zero():
        raise ValueError(f"antiderivative does not vanish at d = {d}")
    return numerator


def orthogonality_check(bound: int = 3) -> CheckReport:
    """Orthogonality of the plane waves on integer and half-integer grids.

    l and m range over the values with |l|, |m| <= bound in Z (odd p) and in
    Z + 1/2 (even p).
    """
    check_scalar(bound, "bound", int, min_val=0)
    report = CheckReport(name="orthogonality")
    grids = {
        "integer": [Fraction(k) for k in range(-bound, bound + 1)],
        "half-integer": [Fraction(2 * k + 1, 2) for k in range(-bound - 1, bound + 1)],
    }
    for grid_name, grid in grids.items():
        for ell in grid:
            for m in grid:
                value = orthogonality_value(ell, m)
                expected = CycScalar.one() if ell == m else CycScalar.zero()
                report.add(f"{grid_name} l={ell} m={m}", value == expected, value)
    return report


def resolution_indices(n_terms: int, p: int) -> List[int]:
    """n_m = 1-(m+1)p for even m and -1-mp for odd m, m = 0..n_terms-1."""
    check_p(p)
    check_scalar(n_terms, "n_terms", int, min_val=1)
    return [1 - (m + 1) * p if m % 2 == 0 else -1 - m * p for m in range(n_terms)]


def n_abel_terms(p: int, r: float, threshold: float = 1e-9) -> int:
    """Even number of terms 2K with r^{2pK} < threshold."""
    check_scalar(r, "r", float, min_val=0.0, max_val=1.0, include_boundaries="neither")
    pairs = math.floor(math.log(threshold) / (2 * p * math.log(r))) + 1
    return 2 * pairs


def abel_partial_sum(nu_prime: Rational, p: int, r: float, n_terms: int) -> complex:
    """sum_m (-1)^m x_r^{-n_m} with x_r = r e^{pi i nu'/2}.

    Each term is the phase of the typical S-entry against the resolution
    module of index n_m, deformed into the unit disc.
    """
    x_r = r * np.exp(1j * np.pi * float(Fraction(nu_prime)) / 2)
    exponents = -np.array(resolution_indices(n_terms, p), dtype=float)
    signs = np.where(np.arange(n_terms) % 2 == 0, 1.0, -1.0)
    return complex(np.sum(signs * x_r ** exponents))


def abel_closed_form(nu_prime: Rational, p: int, r: float = 1.0) -> complex:
    """(x_r - x_r^{-1}) / (x_r^p - x_r^{-p})."""
    x_r = r * np.exp(1j * np.pi * float(Fraction(nu_prime)) / 2)
    return complex((x_r - 1 / x_r) / (x_r ** p - x_r ** (-p)))


def default_nu_values(p: int, den_bound: int = 8) -> List[Fraction]:
    """Rationals in (-1, 1) with bounded denominator, away from the poles (2/p)Z."""
    check_p(p)
    return [
        nu
        for nu in rational_grid(den_bound, -1, 1)
        if abs(nu) < 1 and (nu * p / 2).denominator != 1
    ]


def abel_regularization_check(
    p: int,
    values: Optional[Sequence[Rational]] = None,
    r: float = 1 - 1e-3,
    rtol: float = 1e-6,
) -> CheckReport:
    """Abel partial sums of the resolution series against the regularized unit entry.

    Rows compare the partial sum at radius r with the closed form at the
    same radius (relative tolerance `rtol`) and the closed form at r = 1
    with the exact value of `s_chi_unit_typical`. The witness of each sum row
    is the distance of the partial sum to the r = 1 value.
    """
    check_p(p)
    check_scalar(rtol, "rtol", float, min_val=0.0, include_boundaries="neither")
    if values is None:
        values = default_nu_values(p)
    n_terms = n_abel_terms(p, r)
    logger.info(f"abel check at p={p} with {n_terms} terms on {len(values)} points")
    report = CheckReport(name=f"abel_regularization[p={p}]")
    for nu in values:
        partial = abel_partial_sum(nu, p, r, n_terms)
        deformed = abel_closed_form(nu, p, r)
        limit = abel_closed_form(nu, p)
        report.add(
            f"partial sum nu'={nu}",
            abs(partial - deformed) <= rtol * abs(deformed),
            abs(partial - limit),
        )
        exact = s_chi_unit_typical(nu, p)
        report.add(f"limit nu'={nu}", agrees(exact, limit), exact)
    return report
