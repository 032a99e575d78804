from fractions import Fraction

import pytest

from uqbench.utils import check_index_range
from uqbench.utils import check_p
from uqbench.utils import check_rational
from uqbench.utils import rational_grid
from uqbench.utils import sample_rationals


# p, err, description
invalid_input_of_check_p = [
    (1, ValueError, "p"),
    (0, ValueError, "p"),
    ("3", TypeError, "p"),
    (3.0, TypeError, "p"),
]


@pytest.mark.parametrize("p, err, description", invalid_input_of_check_p)
def test_check_p_using_invalid_inputs(p, err, description):
    with pytest.raises(err, match=f"{description}*"):
        check_p(p)


def test_check_rational():
    assert check_rational(3, "x") == Fraction(3)
    assert check_rational(Fraction(1, 2), "x") == Fraction(1, 2)
    with pytest.raises(TypeError, match="`x` must be an int or a Fraction"):
        check_rational(0.5, "x")
    with pytest.raises(TypeError, match="`x` must be an int or a Fraction"):
        check_rational(True, "x")


def test_check_index_range():
    check_index_range(2, "s", 1, 2)
    with pytest.raises(ValueError):
        check_index_range(3, "s", 1, 2)


def test_rational_grid():
    grid = rational_grid(2, -1, 1)
    assert grid == [
        Fraction(-1),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(1, 2),
        Fraction(1),
    ]
    assert len(rational_grid(4, 0, 1)) == 7
    with pytest.raises(ValueError):
        rational_grid(0, 0, 1)


def test_sample_rationals_is_seeded():
    candidates = rational_grid(6, -3, 3)
    first = sample_rationals(candidates, 10, random_state=12345)
    second = sample_rationals(candidates, 10, random_state=12345)
    assert first == second
    assert len(first) == 10
    assert first == sorted(first)
    assert sample_rationals(candidates[:3], 10) == candidates[:3]
