from fractions import Fraction

import pytest

from uqbench.qmodules import linalg
from uqbench.qmodules import make_projective
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.ribbon import balancing_check
from uqbench.ribbon import braiding
from uqbench.ribbon import twist
from uqbench.ribbon import twist_closed_form


def test_braiding_is_module_map(p):
    m, n = make_simple(1, 0, p), make_typical(Fraction(1, 2), p)
    assert braiding(m, n).is_module_map()
    assert braiding(n, m).is_module_map()


def test_braiding_requires_same_p():
    with pytest.raises(ValueError, match="modules must share the same `p`"):
        braiding(make_simple(0, 0, 2), make_simple(0, 0, 3))


@pytest.mark.parametrize(
    "module",
    [
        make_simple(1, 0, 3),
        make_simple(2, -1, 3),
        make_typical(Fraction(1, 3), 3),
        make_typical(Fraction(-5, 4), 4),
    ],
)
def test_twist_on_highest_weight_modules(module):
    # highest weight modules are twisted by a scalar
    scalar = linalg.scalar_of(twist(module))
    assert scalar == twist_closed_form(module.highest_weight(), module.p)


def test_twist_on_projective_is_not_scalar():
    assert linalg.scalar_of(twist(make_projective(0, 0, 2))) is None


@pytest.mark.parametrize(
    "pair",
    [
        (make_simple(1, 0, 2), make_simple(1, 1, 2)),
        (make_simple(1, 0, 3), make_typical(Fraction(1, 2), 3)),
        (make_typical(Fraction(1, 3), 3), make_typical(Fraction(2, 3), 3)),
    ],
)
def test_balancing(pair):
    report = balancing_check(*pair)
    assert report.passed
