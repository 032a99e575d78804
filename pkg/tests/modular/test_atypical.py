import pytest

from uqbench.modular import antisymmetrization_check
from uqbench.modular import AtypIndex
from uqbench.modular import check_atypical_comparison
from uqbench.modular import hopf_atypical_ratio
from uqbench.modular import hopf_ratio_closed_form
from uqbench.modular import lambda_set
from uqbench.modular import lambda_tilde_set


def test_lambda_set(p):
    indices = lambda_set(p)
    assert len(indices) == p * (p - 1) // 2
    assert all(AtypIndex.from_label(x.label()) == x for x in indices)


def test_lambda_tilde_set():
    assert [x.s_prime for x in lambda_tilde_set(2)] == [-2]
    with pytest.raises(ValueError, match="`p` must be even"):
        lambda_tilde_set(3)


# kwargs, err, description
invalid_input_of_atyp_index = [
    (dict(s=0, s_prime=0, p=3), ValueError, "s"),
    (dict(s=3, s_prime=0, p=3), ValueError, "s"),
    (dict(s=1, s_prime=-1, p=3), ValueError, "s_prime"),
    (dict(s=1, s_prime=1, p=3), ValueError, "`s \\+ s' \\+ 1` must be even"),
]


@pytest.mark.parametrize("kwargs, err, description", invalid_input_of_atyp_index)
def test_atyp_index_using_invalid_input(kwargs, err, description):
    with pytest.raises(err, match=f"{description}*"):
        AtypIndex(**kwargs)


def test_antisymmetrization(p):
    report = antisymmetrization_check(p)
    assert report.passed, report.first_failure()


@pytest.mark.parametrize("p", [3, 5])
def test_atypical_comparison(p):
    report = check_atypical_comparison(p)
    assert report.passed, report.first_failure()


def test_atypical_comparison_needs_odd_p():
    with pytest.raises(ValueError, match="`p` must be odd"):
        check_atypical_comparison(4)


def test_hopf_ratio_at_unit(odd_p):
    unit = AtypIndex(s=1, s_prime=0, p=odd_p)
    for b in lambda_set(odd_p):
        assert hopf_atypical_ratio(unit, b, odd_p) == 1
        assert hopf_ratio_closed_form(unit, b, odd_p) == 1
