from fractions import Fraction

import pytest

from uqbench.exceptions import PoleError
from uqbench.modular import abel_closed_form
from uqbench.modular import check_typical_comparison
from uqbench.modular import s_chi_unit_typical
from uqbench.modular import typical_indices
from uqbench.modular import typical_pairs
from uqbench.modular import TypicalIndex
from uqbench.modular import unit_quotient
from uqbench.scalars import agrees


# kwargs, err, description
invalid_input_of_typical_index = [
    (dict(nu=Fraction(3, 2), ell=1, p=3), ValueError, "`nu` must be in"),
    (
        dict(nu=Fraction(1, 3), ell=Fraction(1, 2), p=3),
        ValueError,
        "`ell \\+ \\(p-1\\)/2`",
    ),
    (dict(nu=Fraction(2, 3), ell=0, p=3), ValueError, "`nu` must give a typical"),
]


@pytest.mark.parametrize("kwargs, err, description", invalid_input_of_typical_index)
def test_typical_index_using_invalid_input(kwargs, err, description):
    with pytest.raises(err, match=f"{description}*"):
        TypicalIndex(**kwargs)


def test_typical_index_label_round_trip(p):
    for index in typical_indices(p, den_bound=2, charge_bound=0):
        assert TypicalIndex.from_label(index.label()) == index


def test_typical_pairs_are_deterministic():
    first = typical_pairs(3, size=8, den_bound=2, random_state=3)
    second = typical_pairs(3, size=8, den_bound=2, random_state=3)
    assert first == second
    assert len(first) == 8


@pytest.mark.parametrize("p", [2, 3, 4])
def test_typical_comparison(p):
    report = check_typical_comparison(p, size=8, den_bound=3, random_state=1)
    assert report.passed, report.first_failure()


def test_unit_entry():
    p, nu = 3, Fraction(1, 3)
    exact = s_chi_unit_typical(nu, p)
    assert exact * unit_quotient(nu, p) == 1
    assert agrees(exact, abel_closed_form(nu, p))
    with pytest.raises(PoleError):
        s_chi_unit_typical(Fraction(2, 3), p)
