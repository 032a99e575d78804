from fractions import Fraction

import pytest

from uqbench.exceptions import ConductorMismatchError
from uqbench.exceptions import PoleError
from uqbench.scalars import common_conductor
from uqbench.scalars import CycScalar
from uqbench.scalars import cyclotomic_polynomial
from uqbench.scalars import embed_rootexp
from uqbench.scalars import qbrace
from uqbench.scalars import qfactorial
from uqbench.scalars import qint
from uqbench.scalars import qpow
from uqbench.scalars import RootExp


def test_cyclotomic_polynomial():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_conductor_is_even():
    z = CycScalar(3, {1: 1})
    assert z.conductor == 6
    assert CycScalar.zeta(3) ** 3 == 1
    with pytest.raises(ValueError, match="`conductor` must be a positive integer"):
        CycScalar(0, {0: 1})


def test_field_arithmetic():
    i = CycScalar.zeta(4)
    assert i * i == -1
    assert (i + 1) * (1 - i) == 2
    w = CycScalar.zeta(10, 3) + Fraction(2, 3)
    assert w * w.inverse() == 1
    assert w / w == 1
    assert (w ** -2) * (w ** 2) == 1
    assert w.conjugate().conjugate() == w


def test_mixed_conductors():
    # zeta_8^2 = zeta_4
    assert CycScalar.zeta(8) ** 2 == CycScalar.zeta(4)
    total = CycScalar.zeta(6) + CycScalar.zeta(4)
    assert total.conductor == 12
    assert abs(complex(total) - (complex(CycScalar.zeta(6)) + 1j)) < 1e-12
    assert common_conductor([RootExp(Fraction(1, 3)), CycScalar.zeta(4), 5]) == 60


def test_division_by_zero():
    with pytest.raises(PoleError):
        CycScalar.zero().inverse()
    with pytest.raises(PoleError):
        CycScalar.one() / 0


def test_rational_conversion():
    assert CycScalar.from_rational(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError, match="is not a rational number"):
        CycScalar.zeta(4).to_fraction()


def test_hash_is_conductor_independent():
    a = CycScalar.zeta(4)
    b = CycScalar.zeta(8) ** 2
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_json_payload():
    z = qint(2, 5)
    payload = z.to_json()
    assert payload["conductor"] == 10
    assert CycScalar.from_json(payload) == z


def test_rootexp():
    r = RootExp(Fraction(5, 2))
    assert r.r == Fraction(1, 2)
    assert r.to_cyc() == CycScalar.zeta(4)
    assert (r * r).to_cyc() == -1
    assert (r / r).r == 0
    assert (r ** 3).to_cyc() == CycScalar.zeta(4).conjugate()
    assert r.conjugate().to_cyc() == CycScalar.zeta(4, 3)
    assert r.conductor == 4


def test_embed_rootexp():
    assert embed_rootexp(Fraction(1, 3), 12) == CycScalar.zeta(6)
    with pytest.raises(ConductorMismatchError):
        embed_rootexp(Fraction(1, 3), 4)


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_quantum_numbers_at_root_of_unity(p):
    assert qpow(p, p) == -1
    assert qpow(2 * p, p) == 1
    assert qint(1, p) == 1
    assert qint(p, p) == 0
    assert qfactorial(p, p) == 0
    assert qfactorial(p - 1, p) != 0
    # [2] = q + q^{-1}
    assert qint(2, p) == qpow(1, p) + qpow(-1, p)
    # {x} is odd in x
    assert qbrace(Fraction(1, 3), p) == -qbrace(Fraction(-1, 3), p)


def test_quantum_number_values():
    assert qint(2, 3) == 1
    assert qint(2, 4) * qint(2, 4) == 2
    assert qint(3, 5) == qint(2, 5)
