from fractions import Fraction

import pytest

from uqbench.qseries import char_bp_product
from uqbench.qseries import char_sigma_w
from uqbench.qseries import final_kw_product
from uqbench.qseries import kw_form
from uqbench.qseries import qh_character_check
from uqbench.qseries import RootDatum
from uqbench.qseries import sigma_relations_check


def test_root_datum():
    datum = RootDatum(3)
    assert datum.positive_roots == [(1, 1)]
    assert datum.zero_roots == [(1, 1)]
    assert datum.half_roots == []
    datum = RootDatum(4)
    assert [datum.h_value(r) for r in datum.positive_roots] == [
        1,
        Fraction(1, 2),
        Fraction(-1, 2),
    ]
    assert datum.half_roots == [(1, (1, 2)), (-1, (2, 2))]
    assert datum.argument((1, 2), -1) == (-1, Fraction(1, 2))
    with pytest.raises(ValueError):
        RootDatum(2)


def test_product_character(p):
    character = char_bp_product(p, 6)
    assert character.ledger.qshift == Fraction(p - 1, 12)
    assert character.series.leading() == ((Fraction(0), 0), 1)


def test_product_character_is_symmetric_in_x():
    series = char_bp_product(2, 6).series
    for (a, b), c in series.items():
        assert series.coefficient(a, -b) == c


def test_final_product_matches_reduction(odd_p):
    ratio = kw_form(odd_p, 6).collapsed(6) / final_kw_product(odd_p, 6).collapsed(6)
    assert ratio.is_trivial()
    assert f"eta({odd_p}tau)^2" in str(final_kw_product(odd_p, 6))


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_qh_character(p):
    report = qh_character_check(p, 6)
    assert report.passed, report.first_failure()


@pytest.mark.parametrize("p", [2, 3])
def test_sigma_relations(p):
    report = sigma_relations_check(p, 5)
    assert report.passed, report.first_failure()


def test_sigma_w_zero():
    assert char_sigma_w(0, 1, 3, 5).is_zero()
    assert not char_sigma_w(1, 1, 3, 5).is_zero()
