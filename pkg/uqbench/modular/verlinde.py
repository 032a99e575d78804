# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Hopf-Link S-Matrix over Lambda_p and the Verlinde Formula."""
from logging import getLogger
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np
from tqdm import tqdm

from ..gring import lambda_sign
from ..gring import ring_basis
from ..gring import structure_constants
from ..gring import to_lambda
from ..qmodules import linalg
from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qbrace
from ..scalars import qpow
from ..utils import check_p
from .atypical import AtypIndex
from .atypical import hopf_closed_float
from .atypical import lambda_set
from .atypical import lambda_tilde_set
from .atypical import s_hopf_atypical


logger = getLogger(__name__)


def _even0(p: int) -> bool:
    return p % 2 == 0


def basis_indices(p: int) -> List[AtypIndex]:
    """Indices of the ring basis, in the order of `gring.ring_basis`.

    For odd p this is Lambda_p; for even p it is Lambda_p together with its
    shifted copy, indexing the basis of the even-part ring.
    """
    check_p(p)
    return [AtypIndex(*to_lambda(e), p=p) for e in ring_basis(p, _even0(p))]


def _basis_sign(index: AtypIndex) -> int:
    return 1 if _even0(index.p) else lambda_sign(index.s)


def s_matrix(
    p: int, show_progress: bool = False
) -> Tuple[List[AtypIndex], np.ndarray]:
    """Hopf-link matrix on the basis classes of the semisimplified ring.

    For odd p the entry at (e(s,s'), e(n,n')) is (-1)^{s+n} times the Hopf
    link of the induced modules, which equals q^{-s'n'} [sn]. For even p the
    entries are the plain Hopf links over Lambda_p and its shifted copy.

    Returns
    ----------
    indices: list of AtypIndex
        Row and column indices.

    matrix: array of CycScalar
        Exact entries, each computed from the R-matrix and checked against
        the closed form.

    """
    indices = basis_indices(p)
    n = len(indices)
    matrix = linalg.zeros(n, n)
    logger.info(f"computing a {n}x{n} Hopf-link matrix at p={p}")
    rows = tqdm(indices, desc="s-matrix", disable=not show_progress)
    for r, a in enumerate(rows):
        for c, b in enumerate(indices):
            sign = _basis_sign(a) * _basis_sign(b)
            matrix[r, c] = s_hopf_atypical(a, b, p) * sign
    return indices, matrix


def s_matrix_float(p: int) -> Tuple[List[AtypIndex], np.ndarray]:
    """Closed-form Hopf-link matrix in complex doubles, in the order of `s_matrix`."""
    indices = basis_indices(p)
    matrix = np.array(
        [
            [
                hopf_closed_float(a, b, p) * _basis_sign(a) * _basis_sign(b)
                for b in indices
            ]
            for a in indices
        ],
        dtype=complex,
    )
    return indices, matrix


def s_matrix_json(p: int) -> Dict[str, object]:
    indices, matrix = s_matrix(p)
    return {
        "p": p,
        "index_set": [str(x) for x in indices],
        "entries": [[z.to_json() for z in row] for row in matrix],
    }


def _unit_position(indices: List[AtypIndex]) -> int:
    return [(x.s, x.s_prime) for x in indices].index((1, 0))


def verlinde_N(
    p: int, show_progress: bool = False
) -> Tuple[np.ndarray, CheckReport]:
    """Fusion coefficients from the Verlinde formula over Lambda_p, odd p.

    N[a, b, k] = sum_n S[a, n] S[b, n] S^{-1}[n, k] / S[1, n], with exact
    inversion of S.

    Returns
    ----------
    constants: array of shape (n_basis, n_basis, n_basis)
        Integer tensor in the order of `basis_indices`. Entries that fail to
        be integers are recorded in the report and stored as 0.

    report: CheckReport
        Integrality, non-negativity, symmetry, and agreement with
        `gring.structure_constants`.

    Raises
    ----------
    SingularMatrixError
        When the S-matrix is not invertible.

    """
    check_p(p)
    if p % 2 == 0:
        raise ValueError(f"`p` must be odd, but {p} is given")
    indices, matrix = s_matrix(p, show_progress=show_progress)
    inverse = linalg.inverse(matrix)
    n = len(indices)
    unit = _unit_position(indices)
    report = CheckReport(name=f"verlinde[p={p}]")
    report.add("size", n == p * (p - 1) // 2, n)
    constants = np.zeros((n, n, n), dtype=int)
    for a in range(n):
        weighted = linalg.zeros(n, n)
        for b in range(n):
            for m in range(n):
                weighted[b, m] = matrix[a, m] * matrix[b, m] / matrix[unit, m]
        fused = linalg.matmul(weighted, inverse)
        for b in range(n):
            for k in range(n):
                value: CycScalar = fused[b, k]
                integral = value.is_rational() and value.to_fraction().denominator == 1
                if not integral:
                    name = f"integral {indices[a]} {indices[b]} {indices[k]}"
                    report.add(name, False, value)
                    continue
                constants[a, b, k] = int(value.to_fraction())
    report.add("non-negative", bool((constants >= 0).all()))
    report.add("symmetric", bool((constants == constants.transpose(1, 0, 2)).all()))
    expected = structure_constants(p)
    mismatches = [
        f"{indices[a]}*{indices[b]}->{indices[k]}"
        for a, b, k in zip(*np.nonzero(constants != expected))
    ]
    report.add("equals ring structure constants", not mismatches, mismatches[:5])
    return constants, report


def homomorphism_check(p: int, even0: bool = False) -> CheckReport:
    """Normalized Hopf columns are characters of the semisimplified ring.

    For every column index b, x -> S[x, b] / S[1, b] must satisfy
    chi(x) chi(y) = sum_z N[x, y, z] chi(z) on the ring basis.
    """
    check_p(p)
    if not even0 and p % 2 == 0:
        raise ValueError(
            f"`p` must be odd outside the even-part ring, but {p} is given"
        )
    report = CheckReport(name=f"homomorphism[p={p},even0={even0}]")
    elems = ring_basis(p, even0)
    constants = structure_constants(p, even0)
    columns = lambda_set(p) + (lambda_tilde_set(p) if even0 else [])
    unit = AtypIndex(s=1, s_prime=0, p=p)
    for b in columns:
        norm = s_hopf_atypical(unit, b, p)
        chi = []
        for e in elems:
            x = AtypIndex(*to_lambda(e), p=p)
            sign = 1 if even0 else lambda_sign(x.s)
            chi.append(s_hopf_atypical(x, b, p) * sign / norm)
        for u in range(len(elems)):
            for v in range(u, len(elems)):
                rhs = CycScalar.zero()
                for w in np.nonzero(constants[u, v])[0]:
                    rhs = rhs + chi[w] * int(constants[u, v, w])
                report.add(
                    f"column {b}: {elems[u]} * {elems[v]}", chi[u] * chi[v] == rhs, rhs
                )
    return report


def quadrant_sign(a: AtypIndex, b: AtypIndex) -> int:
    """Sign of the even-p table entry; (-1)^{s+n} on the Lambda x Lambda block."""
    if a.tilde and b.tilde:
        return 1
    if a.tilde:
        return -1 if (a.s + 1) % 2 else 1
    if b.tilde:
        return -1 if (b.s + 1) % 2 else 1
    return -1 if (a.s + b.s) % 2 else 1


def even_table_entry(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """{1} times the Hopf link: sign * q^{-n's'} {ns}, with s' and n' untilded."""
    s_prime = a.s_prime + p if a.tilde else a.s_prime
    n_prime = b.s_prime + p if b.tilde else b.s_prime
    return qpow(-s_prime * n_prime, p) * qbrace(a.s * b.s, p) * quadrant_sign(a, b)


def check_even_p(p: int, show_progress: bool = False) -> CheckReport:
    """Quadrant table, rank and column homomorphisms of the even-p Hopf matrix.

    The matrix over Lambda_p and its shifted copy is singular, so no
    Verlinde inversion is attempted; the fusion rules of the even-part ring
    are checked through the column homomorphisms instead.
    """
    check_p(p)
    if p % 2:
        raise ValueError(f"`p` must be even, but {p} is given")
    report = CheckReport(name=f"even_p[p={p}]")
    indices, matrix = s_matrix(p, show_progress=show_progress)
    one = qbrace(1, p)
    for r, a in enumerate(indices):
        for c, b in enumerate(indices):
            value = matrix[r, c] * one
            report.add(f"quadrant {a} {b}", value == even_table_entry(a, b, p), value)
    rank = linalg.rank(matrix)
    report.add("rank", rank == p * (p - 1) // 2, rank)
    report.extend(homomorphism_check(p, even0=True))
    return report
