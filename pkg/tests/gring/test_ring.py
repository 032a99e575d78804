import numpy as np
import pytest

from uqbench.gring import from_lambda
from uqbench.gring import GElem
from uqbench.gring import lambda_bijection_check
from uqbench.gring import multiply
from uqbench.gring import product_indices
from uqbench.gring import reduce_compatibility_check
from uqbench.gring import ring_axioms_check
from uqbench.gring import structure_constants
from uqbench.gring import structure_constants_json


# p, even0
rings = [(2, False), (2, True), (3, False), (4, False), (4, True), (5, False)]


@pytest.mark.parametrize("p, even0", rings)
def test_ring_axioms(p, even0):
    report = ring_axioms_check(p, even0)
    assert report.passed, report.first_failure()


@pytest.mark.parametrize("p, even0", [(2, False), (3, False), (4, True)])
def test_reduce_compatibility(p, even0):
    report = reduce_compatibility_check(p, even0)
    assert report.passed, report.first_failure()


@pytest.mark.parametrize("p, even0", [(3, False), (5, False), (2, True), (4, True)])
def test_lambda_bijection(p, even0):
    report = lambda_bijection_check(p, even0)
    assert report.passed, report.first_failure()


def test_product_indices():
    assert product_indices(1, 1, 3) == [0, 2]
    assert product_indices(2, 2, 4) == [0]
    assert product_indices(1, 2, 4) == [1, 3]


def test_square_of_generator():
    p = 3
    x = GElem.from_basis(from_lambda(2, 1, p))
    assert x * x == GElem.from_basis(from_lambda(1, 2, p))


def test_elem_arithmetic():
    p = 3
    x = GElem.from_basis(from_lambda(2, 1, p))
    assert (x - x).is_zero()
    assert (2 * x).coefficient(from_lambda(2, 1, p)) == 2
    assert str(GElem.zero(p)) == "0"
    with pytest.raises(ValueError, match="elements must live in the same ring"):
        x + GElem.unit(5)
    with pytest.raises(ValueError, match="`method` must be one of"):
        multiply(x, x, method="other")


def test_structure_constants():
    p = 3
    constants = structure_constants(p)
    assert constants.shape == (3, 3, 3)
    # the unit is the first basis element
    np.testing.assert_array_equal(constants[0], np.eye(3, dtype=int))
    np.testing.assert_array_equal(constants, constants.transpose(1, 0, 2))
    payload = structure_constants_json(p)
    assert len(payload["basis"]) == 3
    assert all(isinstance(n, int) for n in payload["entries"].values())
