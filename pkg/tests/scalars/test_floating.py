from fractions import Fraction

import numpy as np
import pytest

from uqbench.scalars import agrees
from uqbench.scalars import Backend
from uqbench.scalars import float_matrix
from uqbench.scalars import qbrace
from uqbench.scalars import qbrace_float
from uqbench.scalars import qint
from uqbench.scalars import qint_float
from uqbench.scalars import qpow
from uqbench.scalars import qpow_float
from uqbench.scalars import rootexp_float


def test_backend_from_name():
    assert Backend.from_name("exact") == Backend.EXACT
    assert Backend.from_name("Both") == Backend.BOTH
    with pytest.raises(ValueError, match="`backend` must be one of"):
        Backend.from_name("approximate")


def test_rootexp_float():
    assert abs(rootexp_float(1) + 1) < 1e-12
    assert abs(rootexp_float(Fraction(1, 2)) - 1j) < 1e-12


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_exact_and_float_agree(p):
    for x in [Fraction(1, 3), 1, Fraction(5, 4), 2 * p - 1]:
        assert agrees(qpow(x, p), qpow_float(x, p))
        assert agrees(qbrace(x, p), qbrace_float(x, p))
    for n in range(1, p):
        assert agrees(qint(n, p), qint_float(n, p))


def test_float_matrix():
    exact = np.empty((1, 2), dtype=object)
    exact[0, 0] = qpow(1, 4)
    exact[0, 1] = qint(2, 3)
    approx = float_matrix(exact)
    assert approx.dtype == complex
    assert np.allclose(approx, [[np.exp(1j * np.pi / 4), 1.0]])
    assert not agrees(qint(2, 3), 1.1)
