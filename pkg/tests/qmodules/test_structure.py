import pytest

from uqbench.qmodules import atypical_ses_check
from uqbench.qmodules import loewy_data
from uqbench.qmodules import make_projective
from uqbench.qmodules import projective_loewy_check
from uqbench.qmodules import projective_ses_check


def test_atypical_ses(p):
    for k in range(1, p):
        for ell in (0, 1):
            report = atypical_ses_check(k, ell, p)
            assert report.passed, report.first_failure()


@pytest.mark.parametrize("p", [2, 3, 4])
def test_projective_ses(p):
    for i in range(p - 1):
        report = projective_ses_check(i, 0, p)
        assert report.passed, report.first_failure()


def test_projective_ses_shifted():
    assert projective_ses_check(0, -1, 3).passed


@pytest.mark.parametrize("p", [2, 3])
def test_projective_loewy(p):
    for i in range(p - 1):
        assert projective_loewy_check(i, 0, p).passed


def test_loewy_data():
    data = loewy_data(make_projective(1, 0, 3))
    assert data == {"socle": {(1, 0): 1}, "top": {(1, 0): 1}}


def test_atypical_ses_invalid_k():
    with pytest.raises(ValueError):
        atypical_ses_check(0, 0, 3)
