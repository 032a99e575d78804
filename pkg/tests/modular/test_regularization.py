from fractions import Fraction

import pytest

from uqbench.modular import abel_closed_form
from uqbench.modular import abel_partial_sum
from uqbench.modular import abel_regularization_check
from uqbench.modular import default_nu_values
from uqbench.modular import n_abel_terms
from uqbench.modular import orthogonality_check
from uqbench.modular import orthogonality_value
from uqbench.modular import resolution_indices


def test_resolution_indices():
    assert resolution_indices(4, 3) == [-2, -4, -8, -10]
    with pytest.raises(ValueError):
        resolution_indices(0, 3)


def test_n_abel_terms():
    n_terms = n_abel_terms(3, 0.5)
    assert n_terms % 2 == 0
    assert 0.5 ** (3 * n_terms) < 1e-9
    with pytest.raises(ValueError):
        n_abel_terms(3, 1.0)


def test_partial_sum_inside_disc():
    p, r, nu = 3, 0.9, Fraction(1, 5)
    partial = abel_partial_sum(nu, p, r, n_abel_terms(p, r))
    assert partial == pytest.approx(abel_closed_form(nu, p, r), rel=1e-6)


def test_default_nu_values_avoid_poles(p):
    values = default_nu_values(p, den_bound=4)
    assert values
    assert all(-1 < nu < 1 and (nu * p / 2).denominator != 1 for nu in values)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_abel_regularization(p):
    report = abel_regularization_check(p, values=default_nu_values(p, den_bound=4))
    assert report.passed, report.first_failure()


def test_orthogonality():
    assert orthogonality_check(bound=3).passed
    assert orthogonality_value(Fraction(1, 2), Fraction(1, 2)) == 1
    with pytest.raises(ValueError, match="`m - ell` must be an integer"):
        orthogonality_value(0, Fraction(1, 2))
