from fractions import Fraction

import pytest

from uqbench.deligne import algebra_object_check
from uqbench.deligne import atypical_ss
from uqbench.deligne import canonicalize
from uqbench.deligne import d_object
from uqbench.deligne import es
from uqbench.deligne import ev
from uqbench.deligne import hopf_ext
from uqbench.deligne import induce
from uqbench.deligne import LabelType
from uqbench.deligne import lift_parity
from uqbench.deligne import lifting_criterion_check
from uqbench.deligne import lifts
from uqbench.deligne import nu_ell
from uqbench.exceptions import LiftViolationError
from uqbench.exceptions import NonCatalogueError
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.qmodules import tensor


@pytest.mark.parametrize("p", [2, 3, 4])
def test_lifting_criterion(p):
    report = lifting_criterion_check(p, den_bound=2, ell_bound=1)
    assert report.passed, report.first_failure()


def test_lifts_on_simples():
    lifted, scalar = lifts(d_object(0, make_simple(0, 0, 3)))
    assert lifted and scalar == 1
    obj = d_object(1, make_simple(0, 0, 3))
    assert not lifts(obj)[0]
    assert not lift_parity(obj)
    with pytest.raises(LiftViolationError):
        induce(obj)


def test_lifts_requires_catalogue_module():
    p = 3
    wm = tensor(make_simple(1, 0, p), make_simple(1, 0, p))
    with pytest.raises(NonCatalogueError):
        lifts(d_object(0, wm))


def test_induce():
    # S_{p-1} induces to a typical label
    label = induce(d_object(0, make_simple(2, 0, 3)))
    assert label.kind == LabelType.EV
    assert label.alpha == 3 and label.c == -3
    label = induce(d_object(Fraction(-1, 3), make_typical(Fraction(1, 3), 3)))
    assert label == ev(Fraction(-1, 3), Fraction(1, 3), 3)


def test_label_validation():
    with pytest.raises(LiftViolationError):
        es(1, 0, 0, 3)
    with pytest.raises(ValueError, match="`i` must be in"):
        es(0, 2, 0, 3)
    assert ev(1, 1, 3).kind == LabelType.QV
    assert ev(Fraction(1, 2), Fraction(1, 2), 2).kind == LabelType.EV


def test_canonicalize():
    label = canonicalize(es(1, 1, 2, 3))
    assert (label.c, label.ell, label.sector) == (7, 0, 0)
    label = canonicalize(es(0, 0, 1, 2))
    assert (label.c, label.ell, label.sector) == (2, 0, 1)
    label = canonicalize(ev(Fraction(2, 3), Fraction(-8, 3), 3))
    assert 0 < label.alpha <= 3


def test_coordinates():
    assert nu_ell(ev(Fraction(-1, 3), Fraction(1, 3), 3)) == (Fraction(2, 9), 0)
    assert atypical_ss(es(1, 1, 0, 3)) == (2, -1)
    with pytest.raises(ValueError, match="`label` must be an EV label"):
        nu_ell(es(1, 1, 0, 3))


def test_hopf_ext_under_shifts():
    a, b = es(1, 1, 0, 3), ev(Fraction(-1, 3), Fraction(1, 3), 3)
    assert hopf_ext(a.shift(1), b) == hopf_ext(a, b)
    a, b = es(0, 0, 0, 2), ev(Fraction(1, 2), Fraction(1, 2), 2)
    assert hopf_ext(a.shift(1), b) == -hopf_ext(a, b)
    assert hopf_ext(a.shift(2), b) == hopf_ext(a, b)


def test_algebra_object_odd_p():
    assert algebra_object_check(3, k_bound=2).passed


def test_algebra_object_even_p():
    report = algebra_object_check(2, k_bound=2)
    failed = {row["check"] for row in report.rows if not row["status"]}
    assert failed == {"twist J^-1", "twist J^1"}
