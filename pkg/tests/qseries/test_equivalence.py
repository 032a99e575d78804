from fractions import Fraction

import pytest

from uqbench.exceptions import EmptySeriesError
from uqbench.qseries import char_bp_product
from uqbench.qseries import equiv_check
from uqbench.qseries import PSeries
from uqbench.qseries import QCharacter
from uqbench.qseries import series_dump


def test_equivalence_under_q_shift():
    first = char_bp_product(3, 6)
    second = QCharacter(first.series.shift(Fraction(1, 2)), first.ledger)
    equal, gamma, a, b = equiv_check(first, second)
    assert equal
    assert gamma == 1
    assert (a, b) == (Fraction(-1, 2), 0)


def test_equivalence_under_scaling():
    first = char_bp_product(2, 6)
    second = QCharacter(first.series.scale(3), first.ledger)
    equal, gamma, _, _ = equiv_check(first, second)
    assert equal
    assert gamma == Fraction(1, 3)


def test_inequivalent_series():
    first = char_bp_product(2, 6)
    second = char_bp_product(3, 6)
    equal, _, _, _ = equiv_check(first, second)
    assert not equal


def test_equivalence_of_zero_series():
    zero = QCharacter(PSeries.zero(6, 24))
    with pytest.raises(EmptySeriesError):
        equiv_check(zero, char_bp_product(3, 6))


def test_series_dump():
    character = QCharacter(
        PSeries.from_terms({(0, 0): 1, (Fraction(1, 2), -1): -2}, 3, 24)
    )
    text = series_dump(character, name="sample")
    lines = text.splitlines()
    assert lines[0] == "# sample"
    assert lines[1].startswith("# phase=")
    assert lines[2] == "# cutoff=3"
    assert lines[3:] == ["q^{0} x^{0} : 1", "q^{1/2} x^{-1} : -2"]
    assert text.endswith("\n")
