from fractions import Fraction

import pytest

from uqbench.qseries import euler_product
from uqbench.qseries import factor_series
from uqbench.qseries import PSeries
from uqbench.qseries import series_denominator


@pytest.mark.parametrize("p, denom", [(2, 24), (3, 24), (4, 48), (5, 120)])
def test_series_denominator(p, denom):
    assert series_denominator(p) == denom


def test_euler_product_pentagonal():
    series = euler_product(1, 8, 24)
    expected = {(0, 0): 1, (1, 0): -1, (2, 0): -1, (5, 0): 1, (7, 0): 1}
    assert series == PSeries.from_terms(expected, 8, 24)
    assert series.coefficient(3, 0) == 0


def test_geometric_factor():
    series = factor_series(1, Fraction(1, 2), -1, 2, 24)
    assert dict(series.items()) == {(Fraction(k, 2), k): 1 for k in range(5)}


def test_binomial_factor():
    series = factor_series(-1, 1, 3, 10, 24)
    assert dict(series.items()) == {
        (Fraction(0), 0): 1,
        (Fraction(1), -1): -3,
        (Fraction(2), -2): 3,
        (Fraction(3), -3): -1,
    }


def test_pole_factor_needs_x_bound():
    with pytest.raises(ValueError, match="`x_bound` must be given"):
        factor_series(1, 0, -1, 3, 24)
    series = factor_series(1, 0, -1, 3, 24, x_bound=4)
    assert series.x_bound == 4
    assert series.x_range(0) == (0, 4)


def test_unnormalized_factor():
    with pytest.raises(ValueError, match="must be normalized"):
        factor_series(1, -1, 1, 3, 24)
    with pytest.raises(ValueError, match="must be normalized"):
        factor_series(-1, 0, 1, 3, 24)


def test_series_arithmetic():
    a = PSeries.from_terms({(0, 0): 1, (Fraction(1, 2), 1): 2}, 3, 24)
    b = PSeries.monomial(Fraction(1, 3), -1, 2, 24)
    total = a + b
    assert total.cutoff == 2
    assert (total - b) == a
    product = a * b
    assert product.coefficient(Fraction(5, 6), 0) == 2
    assert a.leading() == ((Fraction(0), 0), 1)
    shifted = a.shift(Fraction(1, 4), 2)
    assert shifted.leading() == ((Fraction(1, 4), 2), 1)
    assert shifted.cutoff == Fraction(13, 4)


def test_series_errors():
    with pytest.raises(ValueError, match="a zero series has no leading term"):
        PSeries.zero(3, 24).leading()
    with pytest.raises(ValueError, match="must have a denominator dividing 24"):
        PSeries.monomial(Fraction(1, 5), 0, 3, 24)
    with pytest.raises(ValueError, match="series must share `denom`"):
        PSeries.one(3, 24) + PSeries.one(3, 48)
    negative = PSeries.monomial(-1, 0, 3, 24)
    with pytest.raises(ValueError, match="non-negative q-exponents"):
        negative * PSeries.one(3, 24)
