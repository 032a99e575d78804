# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Exact Linear Algebra over Cyclotomic Fields.

Matrices are numpy object arrays whose entries are CycScalar values. All
routines skip zero entries, since the matrices built from weight modules are
sparse.
"""
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np

from ..exceptions import SingularMatrixError
from ..scalars import CycScalar


ZERO = CycScalar.zero()
ONE = CycScalar.one()


def zeros(n_rows: int, n_cols: int) -> np.ndarray:
    out = np.empty((n_rows, n_cols), dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for k in range(n):
        out[k, k] = ONE
    return out


def diag(values: Sequence[CycScalar]) -> np.ndarray:
    out = zeros(len(values), len(values))
    for k, v in enumerate(values):
        out[k, k] = CycScalar.coerce(v)
    return out


def vector(values: Sequence[CycScalar]) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    for k, v in enumerate(values):
        out[k] = CycScalar.coerce(v)
    return out


def _nonzeros(matrix: np.ndarray) -> List[List[Tuple[int, CycScalar]]]:
    rows: List[List[Tuple[int, CycScalar]]] = [[] for _ in range(matrix.shape[0])]
    for (i, j), v in np.ndenumerate(matrix):
        if v:
            rows[i].append((j, v))
    return rows


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product a @ b."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"matrix shapes {a.shape} and {b.shape} are not compatible for a product"
        )
    out = zeros(a.shape[0], b.shape[1])
    b_rows = _nonzeros(b)
    for i, row in enumerate(_nonzeros(a)):
        acc = {}
        for k, x in row:
            for j, y in b_rows[k]:
                acc[j] = acc[j] + x * y if j in acc else x * y
        for j, v in acc.items():
            out[i, j] = v
    return out


def matvec(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape[0], dtype=object)
    out.fill(ZERO)
    support = [(k, x) for k, x in enumerate(v) if x]
    for i in range(a.shape[0]):
        acc = ZERO
        for k, x in support:
            if a[i, k]:
                acc = acc + a[i, k] * x
        out[i] = acc
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with index (i, j) -> i * dim(b) + j."""
    n_rows, n_cols = b.shape
    out = zeros(a.shape[0] * n_rows, a.shape[1] * n_cols)
    b_nonzero = [(idx, v) for idx, v in np.ndenumerate(b) if v]
    for (i, j), x in np.ndenumerate(a):
        if not x:
            continue
        for (k, m), y in b_nonzero:
            out[i * n_rows + k, j * n_cols + m] = x * y
    return out


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = zeros(*a.shape)
    for idx in np.ndindex(*a.shape):
        x, y = a[idx], b[idx]
        if x and y:
            out[idx] = x + y
        elif x:
            out[idx] = x
        elif y:
            out[idx] = y
    return out


def sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return add(a, scale(b, -1))


def scale(a: np.ndarray, c) -> np.ndarray:
    c = CycScalar.coerce(c)
    out = zeros(*a.shape)
    if not c:
        return out
    for idx, v in np.ndenumerate(a):
        if v:
            out[idx] = v * c
    return out


def transpose(a: np.ndarray) -> np.ndarray:
    return np.array(a.T, dtype=object)


def is_zero_matrix(a: np.ndarray) -> bool:
    return not any(bool(v) for v in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def scalar_of(a: np.ndarray):
    """Return c if a = c * Id exactly, else None."""
    n = a.shape[0]
    if n == 0:
        return ONE
    c = a[0, 0]
    for (i, j), v in np.ndenumerate(a):
        if i == j:
            if v != c:
                return None
        elif v:
            return None
    return c


def trace(a: np.ndarray) -> CycScalar:
    acc = ZERO
    for k in range(a.shape[0]):
        if a[k, k]:
            acc = acc + a[k, k]
    return acc


def power(a: np.ndarray, n: int) -> np.ndarray:
    out = identity(a.shape[0])
    for _ in range(n):
        out = matmul(out, a)
    return out


def rref(a: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan elimination)."""
    m = np.array(a, dtype=object, copy=True)
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        pivot_row = next((r for r in range(row, n_rows) if m[r, col]), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[[row, pivot_row]] = m[[pivot_row, row]]
        inv = m[row, col].inverse()
        for c in range(col, n_cols):
            if m[row, c]:
                m[row, c] = m[row, c] * inv
        pivot_entries = [(c, m[row, c]) for c in range(col, n_cols) if m[row, c]]
        for r in range(n_rows):
            if r != row and m[r, col]:
                factor = m[r, col]
                for c, v in pivot_entries:
                    m[r, c] = m[r, c] - factor * v
        pivots.append(col)
        row += 1
    return m, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> List[np.ndarray]:
    """Basis of the right kernel of `a`, one vector per free column."""
    n_cols = a.shape[1]
    if a.shape[0] == 0:
        basis = []
        for k in range(n_cols):
            v = vector([ZERO] * n_cols)
            v[k] = ONE
            basis.append(v)
        return basis
    m, pivots = rref(a)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = vector([ZERO] * n_cols)
        v[f] = ONE
        for r, pc in enumerate(pivots):
            if m[r, f]:
                v[pc] = -m[r, f]
        basis.append(v)
    return basis


def inverse(a: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination on [a | I]."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"`a` must be square, but shape {a.shape} is given")
    augmented = np.concatenate([a, identity(n)], axis=1)
    m, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return np.array(m[:, n:], dtype=object)


def is_invertible(a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and rank(a) == a.shape[0]


def column_stack(vectors: Sequence[np.ndarray], n_rows: int) -> np.ndarray:
    out = zeros(n_rows, len(vectors))
    for j, v in enumerate(vectors):
        for i in range(n_rows):
            out[i, j] = v[i]
    return out


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    out = zeros(size, size)
    offset = 0
    for b in blocks:
        k = b.shape[0]
        out[offset : offset + k, offset : offset + k] = b
        offset += k
    return out


class SparseEchelon:
    """Incremental fully reduced row echelon basis of sparse rows.

    Rows are dictionaries column -> CycScalar. Every stored row has a pivot
    entry equal to one, and no stored row has a nonzero entry in another
    row's pivot column.
    """

    def __init__(self) -> None:
        self.rows: dict = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        for pc in [c for c in row if c in self.rows]:
            factor = row.get(pc)
            if not factor:
                continue
            for c, v in self.rows[pc].items():
                value = row.get(c, ZERO) - factor * v
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
        return row

    def insert(self, row: dict) -> bool:
        """Insert a row; return True iff it was independent of the basis."""
        row = self.reduce(row)
        if not row:
            return False
        pivot = min(row)
        inv = row[pivot].inverse()
        row = {c: v * inv for c, v in row.items()}
        for other in self.rows.values():
            factor = other.get(pivot)
            if factor:
                for c, v in row.items():
                    value = other.get(c, ZERO) - factor * v
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
        self.rows[pivot] = row
        return True

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


def sparse_nullspace(rows: Sequence[dict], n_cols: int) -> List[np.ndarray]:
    """Right kernel of a matrix given as sparse rows."""
    echelon = SparseEchelon()
    for row in rows:
        echelon.insert(row)
    pivots = set(echelon.rows)
    basis = []
    for f in range(n_cols):
        if f in pivots:
            continue
        v = vector([ZERO] * n_cols)
        v[f] = ONE
        for pc, row in echelon.rows.items():
            if f in row:
                v[pc] = -row[f]
        basis.append(v)
    return basis
