from fractions import Fraction

import pytest

from uqbench.exceptions import PoleError
from uqbench.qseries import eta_factor
from uqbench.qseries import eta_form
from uqbench.qseries import Ledger
from uqbench.qseries import ProductForm
from uqbench.qseries import PSeries
from uqbench.qseries import theta01
from uqbench.qseries import theta11


def test_eta_factor():
    series = eta_factor(1, 2, 24)
    assert dict(series.items()) == {
        (Fraction(1, 24), 0): 1,
        (Fraction(25, 24), 0): -1,
    }


def test_theta01_at_zero():
    # sum_n (-1)^n q^{n^2/2}
    character = theta01(1, (0, 0), 8, 24)
    expected = {(0, 0): 1}
    for n in range(1, 5):
        expected[(Fraction(n * n, 2), 0)] = 2 * (-1) ** n
    assert character.series == PSeries.from_terms(expected, 8, 24)
    assert character.ledger == Ledger()


def test_theta11_vanishes_at_q():
    assert theta11(1, (0, 1), 6, 24).is_zero()
    assert not theta11(1, (1, Fraction(1, 2)), 6, 24).is_zero()


def test_eta_quotient_leading_exponent(p):
    character = ProductForm.build(eta={p: 2, 1: -2}).expand(6, 24 * p)
    assert character.ledger.qshift == Fraction(p - 1, 12)
    assert character.series.leading() == ((Fraction(0), 0), 1)


def test_sqrt():
    form = ProductForm.build(eta={1: 1}, factors={(1, Fraction(1, 2)): -1})
    assert (form * form).sqrt() == form
    with pytest.raises(ValueError, match="product is not a perfect square"):
        form.sqrt()


def test_division_cancels():
    form = ProductForm.build(eta={2: 3}, factors={(0, 1): 2, (-1, 2): -1})
    assert (form / form).is_trivial()


def test_normalized():
    form = ProductForm.build(factors={(1, -1): 2}).normalized()
    assert form.factors == (((-1, Fraction(1)), 2),)
    assert form.ledger.qshift == -2
    assert form.ledger.xshift == 2


def test_collapsed():
    form = eta_form(2).collapsed(5)
    assert form.eta == ()
    assert form.factors == (((0, Fraction(2)), 1), ((0, Fraction(4)), 1))
    assert form.ledger.qshift == Fraction(1, 12)


def test_expand_pole():
    with pytest.raises(PoleError):
        ProductForm.build(factors={(0, 0): -1}).expand(3, 24)
    assert ProductForm.build(factors={(0, 0): 1}).expand(3, 24).is_zero()
