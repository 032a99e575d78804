# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Catalogue of Weight Modules."""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from logging import getLogger

from sklearn.utils import check_scalar

from ..exceptions import ExtractionError
from ..scalars import CycScalar
from ..scalars import qint
from ..types import Rational
from ..utils import check_index_range
from ..utils import check_p
from ..utils import check_rational
from . import linalg
from .base import ModuleKind
from .base import ModuleLabel
from .base import WeightModule
from .base import module_from_actions
from .homspace import submodule_generated
from .operations import tensor


logger = getLogger(__name__)


def is_typical(alpha: Rational, p: int) -> bool:
    """V_alpha is typical iff alpha is not an integer or alpha is in pZ."""
    alpha = Fraction(alpha)
    return alpha.denominator != 1 or alpha.numerator % p == 0


@lru_cache(maxsize=None)
def make_onedim(ell: int, p: int) -> WeightModule:
    """One-dimensional module C^H_{l p} on which H acts by l p."""
    check_p(p)
    check_scalar(ell, "ell", int)
    return module_from_actions(
        p, [Fraction(ell * p)], {}, {}, ModuleLabel(ModuleKind.ONEDIM, (ell,)), True
    )


def unit(p: int) -> WeightModule:
    """The tensor unit S_0."""
    return make_simple(0, 0, p)


@lru_cache(maxsize=None)
def _bare_simple(n: int, p: int) -> WeightModule:
    weights = [Fraction(n - 2 * i) for i in range(n + 1)]
    e_entries = {(i - 1, i): qint(i, p) * qint(n + 1 - i, p) for i in range(1, n + 1)}
    f_entries = {(i + 1, i): CycScalar.one() for i in range(n)}
    return module_from_actions(
        p, weights, e_entries, f_entries, ModuleLabel(ModuleKind.SIMPLE, (n, 0)), True
    )


@lru_cache(maxsize=None)
def make_simple(n: int, ell: int, p: int) -> WeightModule:
    """Simple module S_n (x) C^H_{l p}.

    Parameters
    ----------
    n: int
        Highest weight of S_n, 0 <= n <= p-1.

    ell: int
        Shift index of the one-dimensional factor.

    p: int
        Order of q.

    Returns
    ----------
    module: WeightModule
        Module of dimension n+1 with weights n + l p - 2i.

    """
    check_p(p)
    check_index_range(n, "n", 0, p - 1)
    bare = _bare_simple(n, p)
    if ell == 0:
        return bare
    shifted = tensor(bare, make_onedim(ell, p))
    return WeightModule(
        p=p,
        weights=shifted.weights,
        E=shifted.E,
        F=shifted.F,
        label=ModuleLabel(ModuleKind.SIMPLE, (n, ell)),
        simple=True,
    )


def make_typical(alpha: Rational, p: int) -> WeightModule:
    """Module V_alpha of dimension p.

    E v_i = [i][i - alpha] v_{i-1}, F v_i = v_{i+1}, H v_i = (alpha + p - 1 - 2i) v_i.
    The module is simple iff alpha is typical.
    """
    check_p(p)
    alpha = check_rational(alpha, "alpha")
    return _make_typical(alpha, p)


@lru_cache(maxsize=None)
def _make_typical(alpha: Fraction, p: int) -> WeightModule:
    weights = [alpha + p - 1 - 2 * i for i in range(p)]
    e_entries = {(i - 1, i): qint(i, p) * qint(i - alpha, p) for i in range(1, p)}
    f_entries = {(i + 1, i): CycScalar.one() for i in range(p - 1)}
    typical = is_typical(alpha, p)
    kind = ModuleKind.TYPICAL if typical else ModuleKind.ATYPICAL
    return module_from_actions(
        p, weights, e_entries, f_entries, ModuleLabel(kind, (alpha,)), typical
    )


@lru_cache(maxsize=None)
def _bare_projective(i: int, p: int) -> WeightModule:
    """P_i generated by a dominant weight-i vector of S_{p-1} (x) S_{p-1-i}."""
    ambient = tensor(make_simple(p - 1, 0, p), make_simple(p - 1 - i, 0, p))
    coords = ambient.weight_indices(Fraction(i))
    fe = linalg.matmul(ambient.F, ambient.E)
    fe2 = linalg.matmul(fe, fe)
    restricted = linalg.zeros(ambient.dim, len(coords))
    for k, c in enumerate(coords):
        restricted[:, k] = fe2[:, c]
    dominant = []
    for solution in linalg.nullspace(restricted):
        v = linalg.vector([linalg.ZERO] * ambient.dim)
        for k, c in enumerate(coords):
            v[c] = solution[k]
        dominant.append(v)
    candidates = list(dominant)
    if len(dominant) > 1:
        for coefficients in product((1, -1, 2), repeat=len(dominant)):
            v = linalg.vector([linalg.ZERO] * ambient.dim)
            for c, d in zip(coefficients, dominant):
                v = v + linalg.vector([x * c for x in d])
            candidates.append(v)
    for v in candidates:
        sub = submodule_generated(ambient, [v])
        if sub.module.dim == 2 * p and sub.module.highest_weight() == 2 * p - 2 - i:
            return WeightModule(
                p=p,
                weights=sub.module.weights,
                E=sub.module.E,
                F=sub.module.F,
                label=ModuleLabel(ModuleKind.PROJECTIVE, (i, 0)),
                simple=False,
            )
    raise ExtractionError(
        f"no dominant vector of weight {i} generates a {2 * p}-dimensional submodule"
    )


@lru_cache(maxsize=None)
def make_projective(i: int, ell: int, p: int) -> WeightModule:
    """Projective indecomposable P_i (x) C^H_{l p} of dimension 2p.

    P_i is extracted from the ambient S_{p-1} (x) S_{p-1-i} as the submodule
    generated by a dominant vector ((FE)^2 v = 0) of weight i. Its highest
    weight is (l+2)p - i - 2, and it sits in
    0 -> V_{p-1-i+lp} -> P_i (x) C^H_{lp} -> V_{1+i-p+lp} -> 0.
    """
    check_p(p)
    check_index_range(i, "i", 0, p - 2)
    bare = _bare_projective(i, p)
    logger.debug(f"extracted P_{i} at p={p}")
    if ell == 0:
        return bare
    shifted = tensor(bare, make_onedim(ell, p))
    return WeightModule(
        p=p,
        weights=shifted.weights,
        E=shifted.E,
        F=shifted.F,
        label=ModuleLabel(ModuleKind.PROJECTIVE, (i, ell)),
        simple=False,
    )


def projective_highest_weight(i: int, ell: int, p: int) -> int:
    return (ell + 2) * p - i - 2


def from_label(label: ModuleLabel, p: int) -> WeightModule:
    """Build the catalogue module named by a label."""
    if label.kind == ModuleKind.SIMPLE:
        return make_simple(label.params[0], label.params[1], p)
    if label.kind in (ModuleKind.TYPICAL, ModuleKind.ATYPICAL):
        return make_typical(label.params[0], p)
    if label.kind == ModuleKind.ONEDIM:
        return make_onedim(label.params[0], p)
    if label.kind == ModuleKind.PROJECTIVE:
        return make_projective(label.params[0], label.params[1], p)
    raise ValueError(f"`label` must name a catalogue module, but {label} is given")
