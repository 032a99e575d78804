# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Weight Modules and Intertwiners."""
from collections import Counter
from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from enum import auto
from fractions import Fraction
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qbrace
from ..scalars import qpow
from ..types import Character
from ..utils import check_p
from . import linalg


class ModuleKind(Enum):
    """Kind of a module label."""

    SIMPLE = auto()
    TYPICAL = auto()
    ATYPICAL = auto()
    ONEDIM = auto()
    PROJECTIVE = auto()
    TENSOR = auto()
    DUAL = auto()
    SUM = auto()
    SUB = auto()
    QUOT = auto()

    def __repr__(self) -> str:
        return str(self)


@dataclass(frozen=True)
class ModuleLabel:
    """Descriptive tag of a weight module.

    Parameters
    ----------
    kind: ModuleKind
        Catalogue kind, or the construction the module came from.

    params: tuple
        S: (n, l); TYPICAL/ATYPICAL: (alpha,); ONEDIM: (l,); PROJECTIVE: (i, l);
        TENSOR/SUM: child labels; DUAL/SUB/QUOT: (parent label,).

    """

    kind: ModuleKind
    params: Tuple = ()

    @property
    def is_catalogue(self) -> bool:
        return self.kind in (
            ModuleKind.SIMPLE,
            ModuleKind.TYPICAL,
            ModuleKind.ATYPICAL,
            ModuleKind.ONEDIM,
            ModuleKind.PROJECTIVE,
        )

    def __str__(self) -> str:
        name = {
            ModuleKind.SIMPLE: "S",
            ModuleKind.TYPICAL: "V",
            ModuleKind.ATYPICAL: "V",
            ModuleKind.ONEDIM: "OneDim",
            ModuleKind.PROJECTIVE: "P",
            ModuleKind.TENSOR: "Tensor",
            ModuleKind.DUAL: "Dual",
            ModuleKind.SUM: "Sum",
            ModuleKind.SUB: "Sub",
            ModuleKind.QUOT: "Quot",
        }[self.kind]
        return f"{name}({','.join(str(x) for x in self.params)})"


@dataclass(frozen=True)
class WeightModule:
    """Finite-dimensional weight module of the unrolled restricted quantum group.

    The basis vectors are H-eigenvectors; E and F act by matrices in column
    convention (column j is the image of basis vector j).

    Parameters
    ----------
    p: int
        Order of q = e^{pi i/p}.

    weights: tuple of Fraction
        H-eigenvalue of each basis vector.

    E: np.ndarray
        Object matrix of the E action.

    F: np.ndarray
        Object matrix of the F action.

    label: ModuleLabel
        Descriptive tag.

    simple: bool, default=None
        Whether the module is known to be simple.

    """

    p: int
    weights: Tuple[Fraction, ...]
    E: np.ndarray = field(repr=False, compare=False)
    F: np.ndarray = field(repr=False, compare=False)
    label: ModuleLabel = ModuleLabel(ModuleKind.SUM)
    simple: Optional[bool] = None

    def __post_init__(self) -> None:
        check_p(self.p)
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        n = len(self.weights)
        for name, matrix in (("E", self.E), ("F", self.F)):
            if matrix.shape != (n, n):
                raise ValueError(
                    f"`{name}` must have shape {(n, n)}, but {matrix.shape} is given"
                )

    @property
    def dim(self) -> int:
        return len(self.weights)

    def k_power(self, m: int) -> np.ndarray:
        """Matrix of K^m = diag(q^{m w})."""
        return linalg.diag([qpow(m * w, self.p) for w in self.weights])

    @property
    def K(self) -> np.ndarray:
        return self.k_power(1)

    @property
    def H(self) -> np.ndarray:
        return linalg.diag([CycScalar.from_rational(w) for w in self.weights])

    def character(self) -> Character:
        return dict(Counter(self.weights))

    def weight_indices(self, w: Fraction) -> Tuple[int, ...]:
        return tuple(k for k, x in enumerate(self.weights) if x == w)

    def highest_weight(self) -> Fraction:
        return max(self.weights)

    def check_relations(self) -> CheckReport:
        """Verify the defining relations exactly.

        K E = q^2 E K, K F = q^{-2} F K, [H, E] = 2E, [H, F] = -2F,
        [E, F] = (K - K^{-1})/(q - q^{-1}) and E^p = F^p = 0.
        """
        report = CheckReport(name=f"relations[{self.label}]")
        p = self.p
        k, k_inv = self.K, self.k_power(-1)
        q2 = qpow(2, p)
        report.add(
            "KE=q^2EK",
            linalg.equal(
                linalg.matmul(k, self.E), linalg.scale(linalg.matmul(self.E, k), q2)
            ),
        )
        report.add(
            "KF=q^-2FK",
            linalg.equal(
                linalg.matmul(k, self.F),
                linalg.scale(linalg.matmul(self.F, k), q2.inverse()),
            ),
        )
        h = self.H
        report.add(
            "[H,E]=2E",
            linalg.equal(
                linalg.sub(linalg.matmul(h, self.E), linalg.matmul(self.E, h)),
                linalg.scale(self.E, 2),
            ),
        )
        report.add(
            "[H,F]=-2F",
            linalg.equal(
                linalg.sub(linalg.matmul(h, self.F), linalg.matmul(self.F, h)),
                linalg.scale(self.F, -2),
            ),
        )
        commutator = linalg.sub(
            linalg.matmul(self.E, self.F), linalg.matmul(self.F, self.E)
        )
        expected = linalg.scale(linalg.sub(k, k_inv), qbrace(1, p).inverse())
        report.add("[E,F]=(K-K^-1)/(q-q^-1)", linalg.equal(commutator, expected))
        report.add("E^p=0", linalg.is_zero_matrix(linalg.power(self.E, p)))
        report.add("F^p=0", linalg.is_zero_matrix(linalg.power(self.F, p)))
        return report

    def to_json(self) -> Dict[str, object]:
        def dump(matrix: np.ndarray) -> Dict[str, object]:
            return {
                f"{i},{j}": v.to_json() for (i, j), v in np.ndenumerate(matrix) if v
            }

        return {
            "label": str(self.label),
            "p": self.p,
            "weights": [str(w) for w in self.weights],
            "E": dump(self.E),
            "F": dump(self.F),
        }


@dataclass(frozen=True)
class Intertwiner:
    """Module map between two weight modules (matrix in column convention).

    Parameters
    ----------
    source: WeightModule
        Domain of the map.

    target: WeightModule
        Codomain of the map.

    matrix: np.ndarray
        Object matrix of shape (target.dim, source.dim).

    """

    source: WeightModule
    target: WeightModule
    matrix: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        expected = (self.target.dim, self.source.dim)
        if self.matrix.shape != expected:
            raise ValueError(
                f"`matrix` must have shape {expected}, but {self.matrix.shape} is given"
            )

    def is_module_map(self) -> bool:
        """Whether the matrix commutes with the E, F and H actions exactly."""
        m = self.matrix
        for (i, j), v in np.ndenumerate(m):
            if v and self.target.weights[i] != self.source.weights[j]:
                return False
        return linalg.equal(
            linalg.matmul(m, self.source.E), linalg.matmul(self.target.E, m)
        ) and linalg.equal(
            linalg.matmul(m, self.source.F), linalg.matmul(self.target.F, m)
        )

    def is_invertible(self) -> bool:
        return linalg.is_invertible(self.matrix)

    def compose(self, other: "Intertwiner") -> "Intertwiner":
        """self after other."""
        return Intertwiner(
            source=other.source,
            target=self.target,
            matrix=linalg.matmul(self.matrix, other.matrix),
        )


def module_from_actions(
    p: int,
    weights: Sequence[Fraction],
    e_entries: Dict[Tuple[int, int], CycScalar],
    f_entries: Dict[Tuple[int, int], CycScalar],
    label: ModuleLabel,
    simple: Optional[bool] = None,
) -> WeightModule:
    """Build a module from sparse E/F entries keyed by (row, column)."""
    n = len(weights)
    e, f = linalg.zeros(n, n), linalg.zeros(n, n)
    for (i, j), v in e_entries.items():
        e[i, j] = CycScalar.coerce(v)
    for (i, j), v in f_entries.items():
        f[i, j] = CycScalar.coerce(v)
    return WeightModule(
        p=p, weights=tuple(weights), E=e, F=f, label=label, simple=simple
    )
