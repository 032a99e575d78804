from fractions import Fraction

import pytest

from uqbench.qmodules import from_label
from uqbench.qmodules import is_typical
from uqbench.qmodules import make_onedim
from uqbench.qmodules import make_projective
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.qmodules import ModuleKind
from uqbench.qmodules import projective_highest_weight
from uqbench.qmodules import unit


# constructor, kwargs, err, description
invalid_input_of_catalogue = [
    (make_simple, dict(n=3, ell=0, p=3), ValueError, "n"),
    (make_simple, dict(n=-1, ell=0, p=3), ValueError, "n"),
    (make_simple, dict(n=0, ell=0, p=1), ValueError, "p"),
    (
        make_typical,
        dict(alpha=0.5, p=3),
        TypeError,
        "`alpha` must be an int or a Fraction",
    ),
    (make_onedim, dict(ell="1", p=3), TypeError, "ell"),
    (make_projective, dict(i=2, ell=0, p=3), ValueError, "i"),
]


@pytest.mark.parametrize(
    "constructor, kwargs, err, description", invalid_input_of_catalogue
)
def test_catalogue_using_invalid_inputs(constructor, kwargs, err, description):
    with pytest.raises(err, match=f"{description}*"):
        _ = constructor(**kwargs)


def test_is_typical():
    assert is_typical(Fraction(1, 2), 3)
    assert is_typical(0, 3)
    assert is_typical(6, 3)
    assert not is_typical(1, 3)
    assert not is_typical(-2, 3)


def test_simple_modules(p):
    for n in range(p):
        for ell in (-1, 0, 1):
            module = make_simple(n, ell, p)
            assert module.dim == n + 1
            assert module.highest_weight() == n + ell * p
            assert module.simple
            assert module.check_relations().passed
    assert unit(p).weights == (Fraction(0),)


def test_typical_modules(p):
    for alpha in (Fraction(1, 2), Fraction(-2, 3), 1, p):
        module = make_typical(alpha, p)
        assert module.dim == p
        assert module.highest_weight() == alpha + p - 1
        assert module.check_relations().passed
        expected = ModuleKind.TYPICAL if is_typical(alpha, p) else ModuleKind.ATYPICAL
        assert module.label.kind == expected


def test_onedim_module():
    module = make_onedim(2, 3)
    assert module.weights == (Fraction(6),)
    assert module.check_relations().passed


@pytest.mark.parametrize("p", [2, 3, 4])
def test_projective_modules(p):
    for i in range(p - 1):
        for ell in (0, 1):
            module = make_projective(i, ell, p)
            assert module.dim == 2 * p
            assert module.highest_weight() == projective_highest_weight(i, ell, p)
            assert module.highest_weight() == (ell + 2) * p - i - 2
            assert module.check_relations().passed


def test_from_label():
    module = make_simple(1, 1, 3)
    assert from_label(module.label, 3).weights == module.weights
    typical = make_typical(Fraction(1, 2), 3)
    assert from_label(typical.label, 3).weights == typical.weights
