# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Fusion and Braiding of Induced Modules."""
from collections import Counter
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from ..deligne import d_object
from ..deligne import ExtLabel
from ..deligne import induce
from ..deligne import LabelType
from ..deligne import underlying
from ..exceptions import NonScalarBlockError
from ..qmodules import ModuleKind
from ..qmodules import tensor
from ..qmodules import WeightModule
from ..qmodules import linalg
from ..ribbon import braiding
from ..ribbon import monodromy
from ..scalars import CycScalar
from ..scalars import qpow
from .decompose import decompose
from .decompose import FusionDecomp


logger = getLogger(__name__)


@dataclass(frozen=True)
class ExtFusion:
    """Tensor product of two induced modules with its certified decomposition.

    Parameters
    ----------
    lhs: ExtLabel
        First factor.

    rhs: ExtLabel
        Second factor.

    decomposition: FusionDecomp
        Decomposition of the underlying quantum group module.

    labels: tuple of ExtLabel
        Canonical induced label of each model of the decomposition.

    """

    lhs: ExtLabel
    rhs: ExtLabel
    decomposition: FusionDecomp = field(repr=False, compare=False)
    labels: Tuple[ExtLabel, ...] = ()

    @property
    def summands(self) -> List[Tuple[ExtLabel, int]]:
        counts = Counter(self.labels)
        return sorted(counts.items(), key=lambda item: str(item[0]))


@lru_cache(maxsize=None)
def tensor_ext(lhs: ExtLabel, rhs: ExtLabel) -> ExtFusion:
    """Tensor the underlying Deligne objects, decompose and induce each summand."""
    if lhs.p != rhs.p:
        raise ValueError(
            f"labels must share the same `p`, but {lhs.p} and {rhs.p} are given"
        )
    a, b = underlying(lhs), underlying(rhs)
    product = a.tensor(b)
    decomposition = decompose(product.wm)
    labels = tuple(induce(d_object(product.fock.c, m)) for m in decomposition.models)
    return ExtFusion(lhs=lhs, rhs=rhs, decomposition=decomposition, labels=labels)


def fuse_ext(lhs: ExtLabel, rhs: ExtLabel) -> List[Tuple[ExtLabel, int]]:
    """Summands of F(U) (x) F(V) = F(U (x) V) as canonical labels with multiplicity."""
    return tensor_ext(lhs, rhs).summands


def fuse_sums(
    left: Iterable[Tuple[ExtLabel, int]], right: Iterable[Tuple[ExtLabel, int]]
) -> List[Tuple[ExtLabel, int]]:
    """Bilinear extension of `fuse_ext` to formal sums of labels."""
    total: Counter = Counter()
    right = list(right)
    for x, m in left:
        for y, n in right:
            for z, k in fuse_ext(x, y):
                total[z] += m * n * k
    return sorted(total.items(), key=lambda item: str(item[0]))


@dataclass(frozen=True)
class SummandBraiding:
    """Braiding data on one summand of a tensor product.

    Parameters
    ----------
    label: ExtLabel
        Canonical label of the summand.

    monodromy: CycScalar
        Scalar part of the double braiding on the summand.

    nilpotent: bool
        Whether the double braiding has a nonzero nilpotent part there.

    top: CycScalar, default=None
        Braiding value c(v) = top * flip(v) on a pure-tensor highest weight
        vector v of the summand, if one exists.

    bottom: CycScalar, default=None
        Same for a pure-tensor lowest weight vector.

    """

    label: ExtLabel
    monodromy: CycScalar
    nilpotent: bool
    top: Optional[CycScalar] = None
    bottom: Optional[CycScalar] = None

    @property
    def braid_scalar(self) -> Optional[CycScalar]:
        return self.top if self.top is not None else self.bottom

    @property
    def extremal_values(self) -> List[CycScalar]:
        return [v for v in (self.top, self.bottom) if v is not None]


def _killed(action: np.ndarray) -> List[int]:
    return [k for k in range(action.shape[1]) if not any(bool(x) for x in action[:, k])]


def _pure_values(
    first: WeightModule, second: WeightModule, action: str, fock: CycScalar
) -> Dict[Fraction, CycScalar]:
    """Braiding values on pure tensors killed by E (or F), keyed by weight."""
    c = braiding(first, second).matrix
    out = {}
    for x in _killed(getattr(first, action)):
        for y in _killed(getattr(second, action)):
            column = x * second.dim + y
            support = [r for r in range(c.shape[0]) if c[r, column]]
            flipped = y * first.dim + x
            if support != [flipped]:
                continue
            out[first.weights[x] + second.weights[y]] = c[flipped, column] * fock
    return out


def _monodromy_block(model: WeightModule, block: np.ndarray) -> Tuple[CycScalar, bool]:
    scalar = block[0, 0]
    rest = linalg.sub(block, linalg.scale(linalg.identity(model.dim), scalar))
    if linalg.is_zero_matrix(rest):
        return scalar, False
    if model.label.kind != ModuleKind.PROJECTIVE:
        raise NonScalarBlockError(f"double braiding on {model.label} is not a scalar")
    if not linalg.is_zero_matrix(linalg.power(rest, 2 * model.p)):
        raise NonScalarBlockError(
            f"double braiding on {model.label} is not scalar plus nilpotent"
        )
    return scalar, True


def braiding_scalars(lhs: ExtLabel, rhs: ExtLabel) -> List[SummandBraiding]:
    """Braiding data on every summand of F(U) (x) F(V), one entry per copy.

    The double braiding is transported to the direct sum of the models by
    the decomposition certificate; each diagonal block is a scalar plus a
    nilpotent part, the latter allowed only on projective summands. The
    braiding itself is read on pure-tensor extremal vectors.
    """
    fusion = tensor_ext(lhs, rhs)
    a, b = underlying(lhs), underlying(rhs)
    fock_braid = a.fock.braid_scalar(b.fock)
    fock_hopf = a.fock.hopf_scalar(b.fock)
    decomposition = fusion.decomposition
    blocks = decomposition.blocks(monodromy(a.wm, b.wm))
    tops = _pure_values(a.wm, b.wm, "E", fock_braid)
    bottoms = _pure_values(a.wm, b.wm, "F", fock_braid)
    out = []
    for model, block, label in zip(decomposition.models, blocks, fusion.labels):
        scalar, nilpotent = _monodromy_block(model, block)
        top = tops.get(model.highest_weight())
        bottom = bottoms.get(min(model.weights))
        out.append(
            SummandBraiding(
                label=label,
                monodromy=scalar * fock_hopf,
                nilpotent=nilpotent,
                top=top,
                bottom=bottom,
            )
        )
    return out


def weight_space_traces(lhs: ExtLabel, rhs: ExtLabel) -> Dict[Fraction, CycScalar]:
    """Sums of q^{w_a w_b/2} over the pure tensors of each weight space.

    Each sum is multiplied by the Fock braiding of the factors.
    """
    a, b = underlying(lhs), underlying(rhs)
    fock = a.fock.braid_scalar(b.fock)
    out: Dict[Fraction, CycScalar] = {}
    for wa in a.wm.weights:
        for wb in b.wm.weights:
            value = qpow(wa * wb / 2, lhs.p)
            out[wa + wb] = out[wa + wb] + value if wa + wb in out else value
    return {w: v * fock for w, v in out.items()}


def fusion_json(lhs: ExtLabel, rhs: ExtLabel) -> Dict[str, object]:
    """Fusion table entry with per-summand braiding data."""
    rows: Dict[ExtLabel, Dict[str, object]] = {}
    for entry in braiding_scalars(lhs, rhs):
        if entry.label in rows:
            rows[entry.label]["mult"] += 1
            continue
        braid = entry.braid_scalar
        rows[entry.label] = {
            "label": str(entry.label),
            "mult": 1,
            "braid_scalar": None if braid is None else braid.to_json(),
            "monodromy": entry.monodromy.to_json(),
            "nilpotent": entry.nilpotent,
        }
    return {
        "lhs": str(lhs),
        "rhs": str(rhs),
        "summands": sorted(rows.values(), key=lambda row: row["label"]),
    }


def is_projective_label(label: ExtLabel) -> bool:
    return label.kind == LabelType.QP
