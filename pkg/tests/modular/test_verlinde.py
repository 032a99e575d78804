import numpy as np
import pytest

from uqbench.modular import AtypIndex
from uqbench.modular import basis_indices
from uqbench.modular import check_even_p
from uqbench.modular import homomorphism_check
from uqbench.modular import s_matrix
from uqbench.modular import s_matrix_float
from uqbench.modular import s_matrix_json
from uqbench.modular import verlinde_N
from uqbench.scalars import agrees


def test_s_matrix_float_agrees(p):
    indices, exact = s_matrix(p)
    float_indices, approx = s_matrix_float(p)
    assert indices == float_indices
    for (r, c), value in np.ndenumerate(approx):
        assert agrees(exact[r, c], value)


def test_s_matrix_is_symmetric(odd_p):
    _, matrix = s_matrix(odd_p)
    n = matrix.shape[0]
    assert all(matrix[r, c] == matrix[c, r] for r in range(n) for c in range(n))


def test_s_matrix_json():
    payload = s_matrix_json(3)
    assert sorted(payload["index_set"]) == ["(1,0)", "(1,2)", "(2,1)"]
    assert len(payload["entries"]) == 3


@pytest.mark.parametrize("p", [3, 5])
def test_verlinde(p):
    constants, report = verlinde_N(p)
    assert report.passed, report.first_failure()
    assert constants.shape == (p * (p - 1) // 2,) * 3


def test_verlinde_square_of_generator():
    p = 3
    constants, _ = verlinde_N(p)
    indices = basis_indices(p)
    x = indices.index(AtypIndex(s=2, s_prime=1, p=p))
    y = indices.index(AtypIndex(s=1, s_prime=2, p=p))
    assert constants[x, x, y] == 1


def test_verlinde_needs_odd_p():
    with pytest.raises(ValueError, match="`p` must be odd"):
        verlinde_N(4)


@pytest.mark.parametrize("p, even0", [(3, False), (5, False), (2, True), (4, True)])
def test_homomorphism(p, even0):
    report = homomorphism_check(p, even0)
    assert report.passed, report.first_failure()


def test_homomorphism_needs_even0_for_even_p():
    with pytest.raises(ValueError, match="`p` must be odd outside the even-part ring"):
        homomorphism_check(4)


def test_even_p(even_p):
    report = check_even_p(even_p)
    assert report.passed, report.first_failure()


def test_even_p_needs_even_p():
    with pytest.raises(ValueError, match="`p` must be even"):
        check_even_p(3)
