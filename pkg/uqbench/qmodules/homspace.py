# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Hom Spaces, Submodules, Quotients and Isomorphism Testing."""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
from sklearn.utils import check_random_state
from sklearn.utils import check_scalar

from ..scalars import CycScalar
from . import linalg
from .base import Intertwiner
from .base import ModuleKind
from .base import ModuleLabel
from .base import WeightModule


logger = getLogger(__name__)

# deterministic coefficients tried before random draws
COEFFICIENT_SEQUENCE = (1, -1, 2, -2, 3, -3, 5, -5, 7, -7)

# largest hom-space dimension searched exhaustively
EXHAUSTIVE_MAX_SIZE = 4


def hom_space(m: WeightModule, n: WeightModule) -> List[Intertwiner]:
    """Basis of the space of module maps M -> N.

    Unknowns are the entries X[a, b] with weight(N_a) = weight(M_b); the
    linear system X E_M = E_N X, X F_M = F_N X is solved exactly.
    """
    if m.p != n.p:
        raise ValueError(
            f"modules must share the same `p`, but {m.p} and {n.p} are given"
        )
    variables: Dict[Tuple[int, int], int] = {}
    for a, wa in enumerate(n.weights):
        for b, wb in enumerate(m.weights):
            if wa == wb:
                variables[(a, b)] = len(variables)
    if not variables:
        return []
    rows = []
    for action_m, action_n in ((m.E, n.E), (m.F, n.F)):
        m_cols = _columns(action_m)
        n_rows = _rows(action_n)
        equations: Dict[Tuple[int, int], Dict[int, CycScalar]] = {}
        # (X A_M)[a, b] = sum_c X[a, c] A_M[c, b]
        for (a, c), var in variables.items():
            for b, v in m_cols[c]:
                eq = equations.setdefault((a, b), {})
                eq[var] = eq.get(var, linalg.ZERO) + v
        # (A_N X)[a, b] = sum_c A_N[a, c] X[c, b]
        for (c, b), var in variables.items():
            for a, v in n_rows[c]:
                eq = equations.setdefault((a, b), {})
                eq[var] = eq.get(var, linalg.ZERO) - v
        rows.extend(equations.values())
    index = {var: key for key, var in variables.items()}
    basis = []
    for solution in linalg.sparse_nullspace(rows, len(variables)):
        matrix = linalg.zeros(n.dim, m.dim)
        for var, value in enumerate(solution):
            if value:
                matrix[index[var]] = value
        basis.append(Intertwiner(source=m, target=n, matrix=matrix))
    return basis


def _columns(matrix: np.ndarray) -> List[List[Tuple[int, CycScalar]]]:
    """For each row index c, the nonzero entries (b, A[c, b])."""
    out: List[List[Tuple[int, CycScalar]]] = [[] for _ in range(matrix.shape[0])]
    for (c, b), v in np.ndenumerate(matrix):
        if v:
            out[c].append((b, v))
    return out


def _rows(matrix: np.ndarray) -> List[List[Tuple[int, CycScalar]]]:
    """For each column index c, the nonzero entries (a, A[a, c])."""
    out: List[List[Tuple[int, CycScalar]]] = [[] for _ in range(matrix.shape[1])]
    for (a, c), v in np.ndenumerate(matrix):
        if v:
            out[c].append((a, v))
    return out


def _weight_components(
    m: WeightModule, v: np.ndarray
) -> List[Dict[int, CycScalar]]:
    components: Dict[Fraction, Dict[int, CycScalar]] = {}
    for k, x in enumerate(v):
        if x:
            components.setdefault(m.weights[k], {})[k] = x
    return list(components.values())


def _apply(matrix: np.ndarray, v: Dict[int, CycScalar]) -> Dict[int, CycScalar]:
    out: Dict[int, CycScalar] = {}
    for k, x in v.items():
        for i in range(matrix.shape[0]):
            a = matrix[i, k]
            if a:
                out[i] = out.get(i, linalg.ZERO) + a * x
    return {i: x for i, x in out.items() if x}


@dataclass(frozen=True)
class Submodule:
    """A submodule with its inclusion and the echelon data used for quotients.

    Parameters
    ----------
    module: WeightModule
        The submodule in its own echelon basis.

    inclusion: Intertwiner
        Inclusion into the ambient module.

    pivots: tuple of int
        Ambient coordinate of the pivot of each basis vector.

    """

    module: WeightModule
    inclusion: Intertwiner
    pivots: Tuple[int, ...]


def submodule_generated(m: WeightModule, vectors: Sequence[np.ndarray]) -> Submodule:
    """Smallest submodule of M containing `vectors` (closure under E, F, H)."""
    echelon = linalg.SparseEchelon()
    queue = deque()
    for v in vectors:
        queue.extend(_weight_components(m, v))
    while queue:
        v = queue.popleft()
        if echelon.insert(dict(v)):
            for action in (m.E, m.F):
                image = _apply(action, v)
                if image:
                    queue.append(image)
    # order basis by decreasing weight, then pivot
    pivots = sorted(echelon.rows, key=lambda c: (-m.weights[c], c))
    basis = [echelon.rows[c] for c in pivots]
    position = {c: k for k, c in enumerate(pivots)}
    size = len(pivots)
    e, f = linalg.zeros(size, size), linalg.zeros(size, size)
    for k, b in enumerate(basis):
        for action, out in ((m.E, e), (m.F, f)):
            image = _apply(action, b)
            for c, x in image.items():
                if c in position:
                    out[position[c], k] = x
    weights = tuple(m.weights[c] for c in pivots)
    sub = WeightModule(
        p=m.p,
        weights=weights,
        E=e,
        F=f,
        label=ModuleLabel(ModuleKind.SUB, (m.label,)),
    )
    inclusion = linalg.zeros(m.dim, size)
    for k, b in enumerate(basis):
        for c, x in b.items():
            inclusion[c, k] = x
    return Submodule(
        module=sub,
        inclusion=Intertwiner(source=sub, target=m, matrix=inclusion),
        pivots=tuple(pivots),
    )


def quotient(m: WeightModule, sub: Submodule) -> Tuple[WeightModule, Intertwiner]:
    """Quotient M / sub with the canonical projection.

    The quotient basis is the image of the non-pivot coordinate vectors.
    """
    pivot_set = set(sub.pivots)
    rest = [c for c in range(m.dim) if c not in pivot_set]
    position = {c: k for k, c in enumerate(rest)}
    projection = linalg.zeros(len(rest), m.dim)
    for c in rest:
        projection[position[c], c] = linalg.ONE
    for k, pc in enumerate(sub.pivots):
        column = sub.inclusion.matrix[:, k]
        for c in rest:
            if column[c]:
                projection[position[c], pc] = -column[c]
    size = len(rest)
    e, f = linalg.zeros(size, size), linalg.zeros(size, size)
    for action, out in ((m.E, e), (m.F, f)):
        image = linalg.matmul(projection, action)
        for k, c in enumerate(rest):
            for i in range(size):
                out[i, k] = image[i, c]
    module = WeightModule(
        p=m.p,
        weights=tuple(m.weights[c] for c in rest),
        E=e,
        F=f,
        label=ModuleLabel(ModuleKind.QUOT, (m.label,)),
    )
    return module, Intertwiner(source=m, target=module, matrix=projection)


def _combination(
    basis: Sequence[Intertwiner], coefficients: Sequence[int]
) -> np.ndarray:
    matrix = linalg.zeros(*basis[0].matrix.shape)
    for b, c in zip(basis, coefficients):
        if c:
            matrix = linalg.add(matrix, linalg.scale(b.matrix, c))
    return matrix


def _candidate_coefficients(
    size: int,
    coefficient_sequence: Sequence[int],
    n_random_trials: int,
    random_state: Optional[int],
    exhaustive_bound: int,
) -> Iterator[List[int]]:
    """Coefficient vectors of the isomorphism search, in the order they are tried.

    Unit vectors come first, then shifts of `coefficient_sequence`, then seeded
    random draws, and finally every nonzero vector with entries in
    [-exhaustive_bound, exhaustive_bound] when `size` is at most
    EXHAUSTIVE_MAX_SIZE.
    """
    for k in range(size):
        yield [int(j == k) for j in range(size)]
    if size == 1:
        return
    n_seq = len(coefficient_sequence)
    for shift in range(n_seq):
        yield [
            coefficient_sequence[(shift + k * (shift + 1)) % n_seq]
            for k in range(size)
        ]
    random_ = check_random_state(random_state)
    for _ in range(n_random_trials):
        yield [int(c) for c in random_.randint(-10, 11, size=size)]
    if size > EXHAUSTIVE_MAX_SIZE:
        logger.debug(f"hom space of dimension {size} is too large for exhaustion")
        return
    values = range(-exhaustive_bound, exhaustive_bound + 1)
    for coefficients in product(values, repeat=size):
        if any(coefficients):
            yield list(coefficients)


def is_isomorphic(
    m: WeightModule,
    n: WeightModule,
    n_random_trials: int = 20,
    random_state: Optional[int] = 12345,
    coefficient_sequence: Sequence[int] = COEFFICIENT_SEQUENCE,
    exhaustive_bound: int = 2,
) -> Optional[Intertwiner]:
    """Return an invertible intertwiner M -> N, or None if none was found.

    Parameters
    ----------
    m, n: WeightModule
        Modules to compare.

    n_random_trials: int, default=20
        Number of seeded random integer combinations of the hom-space basis.

    random_state: int, default=12345
        Seed of the random combinations.

    coefficient_sequence: sequence of int, default=COEFFICIENT_SEQUENCE
        Deterministic coefficients tried before the random draws.

    exhaustive_bound: int, default=2
        Largest absolute coefficient of the final exhaustive search, which
        runs for hom spaces of dimension at most EXHAUSTIVE_MAX_SIZE.

    Returns
    ----------
    iso: Intertwiner or None
        The first invertible candidate.

    """
    check_scalar(n_random_trials, "n_random_trials", int, min_val=0)
    check_scalar(exhaustive_bound, "exhaustive_bound", int, min_val=1)
    if m.dim != n.dim or sorted(m.weights) != sorted(n.weights):
        return None
    basis = hom_space(m, n)
    if not basis:
        return None
    for coefficients in _candidate_coefficients(
        len(basis),
        coefficient_sequence,
        n_random_trials,
        random_state,
        exhaustive_bound,
    ):
        matrix = _combination(basis, coefficients)
        if linalg.is_invertible(matrix):
            return Intertwiner(source=m, target=n, matrix=matrix)
    logger.debug(f"no invertible map found between {m.label} and {n.label}")
    return None
