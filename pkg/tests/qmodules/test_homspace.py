from fractions import Fraction

import pytest

from uqbench.qmodules import direct_sum
from uqbench.qmodules import dual
from uqbench.qmodules import hom_space
from uqbench.qmodules import is_isomorphic
from uqbench.qmodules import make_projective
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.qmodules import quotient
from uqbench.qmodules import submodule_generated
from uqbench.qmodules import tensor
from uqbench.qmodules import linalg


def test_hom_space_of_simples(p):
    for n in range(p):
        assert len(hom_space(make_simple(n, 0, p), make_simple(n, 0, p))) == 1
    assert hom_space(make_simple(0, 0, p), make_simple(0, 1, p)) == []


def test_hom_space_requires_same_p():
    with pytest.raises(ValueError, match="modules must share the same `p`"):
        hom_space(make_simple(0, 0, 2), make_simple(0, 0, 3))


def test_hom_space_maps_are_module_maps():
    proj = make_projective(0, 0, 3)
    basis = hom_space(proj, proj)
    assert len(basis) == 2
    assert all(f.is_module_map() for f in basis)


def test_tensor_product(p):
    m, n = make_simple(1, 0, p), make_typical(Fraction(1, 3), p)
    product = tensor(m, n)
    assert product.dim == m.dim * n.dim
    assert product.check_relations().passed
    character = product.character()
    assert sum(character.values()) == product.dim
    assert max(character) == Fraction(1) + Fraction(1, 3) + p - 1


def test_tensor_with_onedim_is_isomorphic_to_shift():
    p = 3
    shifted = tensor(make_simple(1, 0, p), make_simple(0, 1, p))
    assert is_isomorphic(shifted, make_simple(1, 1, p)) is not None


def test_dual(p):
    m = make_simple(p - 1, 1, p)
    d = dual(m)
    assert sorted(d.weights) == sorted(-w for w in m.weights)
    assert d.check_relations().passed
    assert is_isomorphic(d, make_simple(p - 1, -1, p)) is not None


def test_direct_sum_and_isomorphism():
    p = 3
    a, b = make_simple(0, 0, p), make_simple(1, 1, p)
    total, inclusions = direct_sum([a, b])
    assert total.dim == 3
    assert all(f.is_module_map() for f in inclusions)
    swapped, _ = direct_sum([b, a])
    iso = is_isomorphic(total, swapped)
    assert iso is not None
    assert iso.is_module_map()
    assert iso.is_invertible()
    assert is_isomorphic(a, b) is None


def test_isomorphism_found_by_exhaustive_search():
    # End(S + S) has a basis of rank-one block maps
    s = make_simple(1, 0, 3)
    m, _ = direct_sum([s, s])
    basis = hom_space(m, m)
    assert len(basis) == 4
    assert not any(f.is_invertible() for f in basis)
    iso = is_isomorphic(m, m, n_random_trials=0, coefficient_sequence=(0,))
    assert iso is not None
    assert iso.is_module_map()
    assert iso.is_invertible()


@pytest.mark.parametrize(
    "n_random_trials, exhaustive_bound, err, msg",
    [
        (-1, 2, ValueError, "n_random_trials == -1, must be >= 0"),
        (0, 0, ValueError, "exhaustive_bound == 0, must be >= 1"),
        (1.5, 2, TypeError, "n_random_trials must be an instance of int"),
    ],
)
def test_is_isomorphic_using_invalid_input(n_random_trials, exhaustive_bound, err, msg):
    s = make_simple(0, 0, 2)
    with pytest.raises(err, match=msg):
        is_isomorphic(
            s, s, n_random_trials=n_random_trials, exhaustive_bound=exhaustive_bound
        )


def test_submodule_and_quotient():
    p, k = 3, 1
    v = make_typical(k, p)
    generator = linalg.vector([linalg.ZERO] * v.dim)
    generator[k] = linalg.ONE
    sub = submodule_generated(v, [generator])
    assert sub.module.dim == p - k
    assert sub.inclusion.is_module_map()
    quo, projection = quotient(v, sub)
    assert quo.dim == k
    assert projection.is_module_map()
    assert quo.check_relations().passed
