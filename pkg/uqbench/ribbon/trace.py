# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Quantum Traces, Quantum Dimensions and Hopf Links."""
from collections import Counter
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Iterable
from typing import Optional

import numpy as np

from ..qmodules import is_typical
from ..qmodules import make_simple
from ..qmodules import make_typical
from ..qmodules import ModuleKind
from ..qmodules import WeightModule
from ..qmodules import linalg
from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qbrace
from ..scalars import qpow
from ..types import Rational
from ..utils import check_p
from ..utils import rational_grid
from ..utils import sample_rationals
from .braiding import monodromy


logger = getLogger(__name__)


def qtrace(m: WeightModule, f: np.ndarray) -> CycScalar:
    """Quantum trace trace(K^{1-p} f) of an endomorphism of M."""
    acc = linalg.ZERO
    for k, w in enumerate(m.weights):
        if f[k, k]:
            acc = acc + qpow((1 - m.p) * w, m.p) * f[k, k]
    return acc


def qdim(m: WeightModule) -> CycScalar:
    return qtrace(m, linalg.identity(m.dim))


def qdim_closed_form(j: int, ell: int, p: int) -> CycScalar:
    """(-1)^{(1-p)l + j} [j+1], the quantum dimension of S_j (x) C_{pl}."""
    sign = -1 if ((1 - p) * ell + j) % 2 else 1
    return qbrace(j + 1, p) / qbrace(1, p) * sign


def open_hopf(v: WeightModule, w: WeightModule) -> np.ndarray:
    """Partial quantum trace over V of the monodromy on V (x) W.

    The first factor is closed with the pivot K_V^{1-p}.
    """
    mono = monodromy(v, w)
    out = linalg.zeros(w.dim, w.dim)
    weights = [qpow((1 - v.p) * x, v.p) for x in v.weights]
    for a in range(v.dim):
        offset = a * w.dim
        for i in range(w.dim):
            for j in range(w.dim):
                entry = mono[offset + i, offset + j]
                if entry:
                    out[i, j] = out[i, j] + weights[a] * entry
    return out


def psi_closed_form(weights: Iterable[Rational], lam: Rational, p: int) -> CycScalar:
    """Psi_{l+1-p} evaluated on a weight multiset: sum_s q^{(l+1-p) s}."""
    acc = linalg.ZERO
    gamma = Fraction(lam) + 1 - p
    for s, mult in Counter(Fraction(x) for x in weights).items():
        acc = acc + qpow(gamma * s, p) * mult
    return acc


def renormalized_dim(alpha: Rational, p: int) -> CycScalar:
    """d(V_alpha) = (-1)^{p-1} p {alpha}/{p alpha} for typical alpha.

    For alpha = p m the value is the limit (-1)^{p-1 + m(p+1)}.
    """
    alpha = Fraction(alpha)
    sign = -1 if (p - 1) % 2 else 1
    if alpha.denominator == 1 and alpha.numerator % p == 0:
        m = alpha.numerator // p
        return CycScalar.from_rational(sign * (-1 if (m * (p + 1)) % 2 else 1))
    if alpha.denominator == 1:
        raise ValueError(f"`alpha` must be typical, but {alpha} is given")
    return qbrace(alpha, p) / qbrace(p * alpha, p) * (sign * p)


def hopf_link(v: WeightModule, w: WeightModule) -> CycScalar:
    """Closed Hopf link: the quantum trace over W of the open Hopf link.

    On a typical W the quantum dimension vanishes and the open Hopf link
    scalar is closed with the renormalized dimension d(W).
    """
    phi = open_hopf(v, w)
    if w.label.kind == ModuleKind.TYPICAL:
        scalar = linalg.scalar_of(phi)
        if scalar is None:
            raise ValueError(f"open Hopf link on {w.label} is not a scalar")
        return scalar * renormalized_dim(w.label.params[0], w.p)
    return qtrace(w, phi)


def typical_hopf_check(
    p: int, den_bound: int = 4, size: int = 4, random_state: Optional[int] = 12345
) -> CheckReport:
    """Matrix-trace Hopf links on typical modules against their closed forms.

    hopf_link(V_a, V_b) = (-1)^{p-1} p q^{ab} on all pairs of a seeded
    sample of typical weights, and hopf_link(S_0, V_a) = d(V_a).
    """
    check_p(p)
    half = Fraction(p, 2)
    candidates = [
        a
        for a in rational_grid(den_bound, -half, half)
        if a.denominator != 1 and is_typical(a, p)
    ]
    alphas = sample_rationals(candidates, size, random_state=random_state)
    logger.info(f"typical Hopf links at p={p} on {len(alphas)} weights")
    report = CheckReport(name=f"typical_hopf[p={p}]")
    sign = -1 if (p - 1) % 2 else 1
    modules = {a: make_typical(a, p) for a in alphas}
    for a, b in product(alphas, repeat=2):
        value = hopf_link(modules[a], modules[b])
        report.add(f"V_{a} V_{b}", value == qpow(a * b, p) * (sign * p), value)
    unit = make_simple(0, 0, p)
    for a in alphas:
        value = hopf_link(unit, modules[a])
        closed = qbrace(a, p) / qbrace(p * a, p) * (sign * p)
        report.add(f"S_0 V_{a}", value == closed, value)
    return report
