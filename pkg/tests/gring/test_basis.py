import pytest

from uqbench.exceptions import ParityError
from uqbench.gring import basis
from uqbench.gring import basis_even0
from uqbench.gring import from_lambda
from uqbench.gring import GBasisElem
from uqbench.gring import normal_key
from uqbench.gring import reduce
from uqbench.gring import to_lambda


# p, expected size of basis(p)
basis_sizes = [(2, 1), (3, 3), (4, 6), (5, 10)]


@pytest.mark.parametrize("p, size", basis_sizes)
def test_basis_size(p, size):
    assert len(basis(p)) == size
    assert len({e.key for e in basis(p)}) == size


@pytest.mark.parametrize("p", [2, 4])
def test_basis_even0(p):
    elems = basis_even0(p)
    assert len(elems) == 2 * len(basis(p))
    assert all(e.even0 for e in elems)


def test_basis_even0_needs_even_p():
    with pytest.raises(ParityError):
        basis_even0(3)


# kwargs, err, description
invalid_input_of_basis_elem = [
    (dict(c=1, i=0, ell=0, p=3), ParityError, "`c \\+ i \\+ p l` must be even"),
    (dict(c=0, i=2, ell=0, p=3), ValueError, "i"),
    (dict(c=0, i=0, ell=2, p=3), ValueError, "ell"),
    (dict(c=0, i=0, ell=0, p=3, even0=True), ParityError, "`p` must be even"),
]


@pytest.mark.parametrize("kwargs, err, description", invalid_input_of_basis_elem)
def test_basis_elem_using_invalid_input(kwargs, err, description):
    with pytest.raises(err, match=f"{description}*"):
        GBasisElem(**kwargs)


def test_negligible_classes_reduce_to_none():
    assert normal_key(0, 2, 0, 3) is None
    assert reduce(1, 3, 0, 4) is None


def test_reduce_signs():
    # [c, p-1-i, pl] = -[c, i-1, p(l+1)]
    assert reduce(1, 1, 0, 3) == (-1, GBasisElem(c=1, i=0, ell=1, p=3))
    sign, elem = reduce(0, 0, 0, 3)
    assert (sign, elem) == (1, GBasisElem(c=0, i=0, ell=0, p=3))


def test_reduce_is_two_periodic_in_ell_for_even0():
    assert reduce(0, 0, 2, 4, even0=True) == reduce(0, 0, 0, 4, even0=True)
    sign, _ = reduce(0, 0, 1, 4, even0=True)
    assert sign == -1


@pytest.mark.parametrize("p", [3, 5])
def test_lambda_round_trip(p):
    for elem in basis(p):
        s, s_prime = to_lambda(elem)
        assert 1 <= s <= p - 1 and 0 <= s_prime <= p - 1
        assert from_lambda(s, s_prime, p) == elem


def test_lambda_needs_odd_p():
    with pytest.raises(ValueError, match="`p` must be odd"):
        to_lambda(basis(4)[0])
    with pytest.raises(ParityError):
        from_lambda(1, 1, 3)
