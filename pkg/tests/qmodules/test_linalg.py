import pytest

from uqbench.exceptions import SingularMatrixError
from uqbench.qmodules import linalg
from uqbench.scalars import CycScalar
from uqbench.scalars import qint
from uqbench.scalars import qpow


def _matrix(rows):
    out = linalg.zeros(len(rows), len(rows[0]))
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = CycScalar.coerce(v)
    return out


def test_matmul_and_identity():
    a = _matrix([[1, 2], [3, 4]])
    assert linalg.equal(linalg.matmul(a, linalg.identity(2)), a)
    assert linalg.trace(a) == 5
    assert linalg.equal(linalg.power(a, 2), linalg.matmul(a, a))
    assert linalg.scalar_of(linalg.scale(linalg.identity(3), qpow(1, 3))) == qpow(1, 3)
    assert linalg.scalar_of(a) is None


def test_exact_inverse():
    a = _matrix([[qpow(1, 5), qint(2, 5)], [1, qpow(-1, 5)]])
    inv = linalg.inverse(a)
    assert linalg.equal(linalg.matmul(a, inv), linalg.identity(2))
    assert linalg.is_invertible(a)


def test_singular_matrix():
    a = _matrix([[1, 2], [2, 4]])
    assert linalg.rank(a) == 1
    assert not linalg.is_invertible(a)
    with pytest.raises(SingularMatrixError):
        linalg.inverse(a)
    kernel = linalg.nullspace(a)
    assert len(kernel) == 1
    assert linalg.is_zero_matrix(linalg.matvec(a, kernel[0]))


def test_kron_and_block_diag():
    a = _matrix([[1, 2], [0, 1]])
    b = linalg.identity(3)
    k = linalg.kron(a, b)
    assert k.shape == (6, 6)
    assert k[0, 3] == 2
    d = linalg.block_diag([a, b])
    assert d.shape == (5, 5)
    assert linalg.rank(d) == 5
