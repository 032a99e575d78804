from fractions import Fraction

import pytest

from uqbench.qmodules import make_projective
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.ribbon import hopf_link
from uqbench.ribbon import qdim
from uqbench.ribbon import qdim_closed_form
from uqbench.ribbon import renormalized_dim
from uqbench.ribbon import typical_hopf_check
from uqbench.scalars import CycScalar


def test_qdim_of_simples(p):
    for j in range(p):
        for ell in (-1, 0, 1):
            assert qdim(make_simple(j, ell, p)) == qdim_closed_form(j, ell, p)


def test_qdim_vanishes(p):
    # typical and projective modules have zero quantum dimension
    assert qdim(make_typical(Fraction(1, 2), p)) == 0
    assert qdim(make_typical(p, p)) == 0
    for i in range(p - 1):
        assert qdim(make_projective(i, 0, p)) == 0


def test_qdim_of_steinberg_vanishes(p):
    assert qdim(make_simple(p - 1, 0, p)) == 0


def test_renormalized_dim():
    # limits at alpha in pZ
    assert renormalized_dim(3, 3) == 1
    assert renormalized_dim(2, 2) == 1
    assert renormalized_dim(8, 4) == CycScalar.from_rational(-1)
    with pytest.raises(ValueError, match="`alpha` must be typical"):
        renormalized_dim(1, 3)


def test_hopf_link_with_unit(p):
    unit = make_simple(0, 0, p)
    simple = make_simple(1, 0, p)
    assert hopf_link(unit, simple) == qdim(simple)
    typical = make_typical(Fraction(1, 3), p)
    assert hopf_link(unit, typical) == renormalized_dim(Fraction(1, 3), p)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_typical_hopf_check(p):
    report = typical_hopf_check(p, den_bound=3, size=3, random_state=7)
    assert report.passed, report.first_failure()
    assert report.rows
