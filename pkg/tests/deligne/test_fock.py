from fractions import Fraction

import pytest

from uqbench.deligne import d_object
from uqbench.deligne import DObject
from uqbench.deligne import FockLine
from uqbench.deligne import simple_current
from uqbench.qmodules import make_simple


def test_fock_scalars(p):
    a, b = FockLine(Fraction(1, 2), p), FockLine(Fraction(-2, 3), p)
    assert a.braid_scalar(b) ** 2 == a.hopf_scalar(b)
    assert (a + b).c == Fraction(-1, 6)
    assert FockLine(0, p).twist_scalar() == 1


def test_fock_lines_require_same_p():
    with pytest.raises(ValueError, match="Fock lines must share the same `p`"):
        FockLine(1, 2).hopf_scalar(FockLine(1, 3))
    with pytest.raises(ValueError, match="factors must share the same `p`"):
        DObject(fock=FockLine(0, 2), wm=make_simple(0, 0, 3))


def test_simple_current(p):
    current = simple_current(2, p)
    assert current.fock.c == -2 * p
    assert current.wm.weights == (Fraction(2 * p),)
    product = simple_current(1, p).tensor(simple_current(1, p))
    assert product.fock.c == current.fock.c
    assert product.wm.weights == current.wm.weights


def test_d_object_str():
    assert str(d_object(1, make_simple(0, 0, 3))).startswith("F(c=1) [x] ")
