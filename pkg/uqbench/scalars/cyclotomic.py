# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Exact Arithmetic in Cyclotomic Fields."""
import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict
from typing import Iterable
from typing import List
from typing import Tuple
from typing import Union

from ..exceptions import ConductorMismatchError
from ..exceptions import PoleError
from ..types import Rational


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _to_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"`x` must be an int, Fraction or str, but {type(x)} is given")


def _factorize(n: int) -> Dict[int, int]:
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's totient function."""
    result = n
    for prime in _factorize(n):
        result = result // prime * (prime - 1)
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius function."""
    factors = _factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def _poly_divexact(num: List[int], den: List[int]) -> List[int]:
    """Exact division of integer polynomials (coefficients low to high, monic den)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coef = num[k + len(den) - 1]
        out[k] = coef
        if coef:
            for j, d in enumerate(den):
                num[k + j] -= coef * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Obtained by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> Tuple[Dict[int, int], ...]:
    """Reduced power-basis vectors of zeta_n^k for k = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    table: List[Dict[int, int]] = []
    current: Dict[int, int] = {0: 1}
    for _ in range(n):
        table.append(current)
        shifted: Dict[int, int] = {}
        top = 0
        for k, c in current.items():
            if k + 1 == deg:
                top = c
            else:
                shifted[k + 1] = c
        if top:
            for j in range(deg):
                if phi[j]:
                    v = shifted.get(j, 0) - top * phi[j]
                    if v:
                        shifted[j] = v
                    else:
                        shifted.pop(j, None)
        current = shifted
    return tuple(table)


def _normalize_conductor(n: int) -> int:
    if n < 1:
        raise ValueError(f"`conductor` must be a positive integer, but {n} is given")
    return n if n % 2 == 0 else 2 * n


class CycScalar:
    """Exact element of the cyclotomic field Q(zeta_N).

    The value is stored as a sparse rational vector in the power basis
    1, zeta_N, ..., zeta_N^{phi(N)-1}, fully reduced modulo Phi_N. Binary
    operations lift both operands to the least common conductor.

    Parameters
    ----------
    conductor: int
        Even conductor N of the field.

    coeffs: Dict[int, Fraction]
        Map from power k (0 <= k < phi(N)) to its rational coefficient.
        Powers k >= phi(N) are reduced on construction.

    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Dict[int, Rational]) -> None:
        conductor = _normalize_conductor(conductor)
        deg = totient(conductor)
        table = _power_table(conductor)
        reduced: Dict[int, Fraction] = {}
        for k, c in coeffs.items():
            c = _to_fraction(c)
            if not c:
                continue
            k %= conductor
            if k < deg:
                reduced[k] = reduced.get(k, Fraction(0)) + c
            else:
                for j, t in table[k].items():
                    reduced[j] = reduced.get(j, Fraction(0)) + c * t
        self.conductor = conductor
        self.coeffs = {k: c for k, c in reduced.items() if c}

    # constructors
    @classmethod
    def from_rational(cls, x: Rational) -> "CycScalar":
        return cls(2, {0: _to_fraction(x)})

    @classmethod
    def zero(cls) -> "CycScalar":
        return cls(2, {})

    @classmethod
    def one(cls) -> "CycScalar":
        return cls(2, {0: 1})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycScalar":
        """Return zeta_n^k = e^{2 pi i k/n}."""
        if n % 2:
            return cls(2 * n, {2 * k: 1})
        return cls(n, {k: 1})

    @staticmethod
    def coerce(x: Union["CycScalar", Rational]) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        return CycScalar.from_rational(x)

    # conductor handling
    def lift(self, conductor: int) -> "CycScalar":
        """Embed into Q(zeta_M) for a multiple M of the current conductor."""
        conductor = _normalize_conductor(conductor)
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ConductorMismatchError(
                f"`conductor` must be a multiple of {self.conductor}, "
                f"but {conductor} is given"
            )
        step = conductor // self.conductor
        return CycScalar(conductor, {k * step: c for k, c in self.coeffs.items()})

    def _aligned(self, other: "CycScalar") -> Tuple["CycScalar", "CycScalar"]:
        if self.conductor == other.conductor:
            return self, other
        n = _lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # arithmetic
    def __add__(self, other: Union["CycScalar", Rational]) -> "CycScalar":
        if not isinstance(other, CycScalar):
            if not other:
                return self
            other = CycScalar.from_rational(other)
        a, b = self._aligned(other)
        coeffs = dict(a.coeffs)
        for k, c in b.coeffs.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        return CycScalar._raw(a.conductor, coeffs)

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar._raw(self.conductor, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: Union["CycScalar", Rational]) -> "CycScalar":
        return self + (-CycScalar.coerce(other))

    def __rsub__(self, other: Rational) -> "CycScalar":
        return CycScalar.coerce(other) - self

    def __mul__(self, other: Union["CycScalar", Rational]) -> "CycScalar":
        if not isinstance(other, CycScalar):
            other = _to_fraction(other)
            if not other:
                return CycScalar._raw(self.conductor, {})
            return CycScalar._raw(
                self.conductor, {k: c * other for k, c in self.coeffs.items()}
            )
        if not self.coeffs or not other.coeffs:
            return CycScalar._raw(max(self.conductor, other.conductor), {})
        a, b = self._aligned(other)
        n = a.conductor
        table = _power_table(n)
        acc: Dict[int, Fraction] = {}
        for i, ci in a.coeffs.items():
            for j, cj in b.coeffs.items():
                c = ci * cj
                for k, t in table[(i + j) % n].items():
                    acc[k] = acc.get(k, Fraction(0)) + c * t
        return CycScalar._raw(n, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if not self.coeffs:
            raise PoleError("cannot invert the zero element")
        if self.is_rational():
            return CycScalar.from_rational(1 / self.coeffs[0])
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        deg = max(self.coeffs)
        value = [self.coeffs.get(k, Fraction(0)) for k in range(deg + 1)]
        # invariant: r_i = s_i * value (mod modulus)
        r0, r1 = modulus, value
        s0: List[Fraction] = [Fraction(0)]
        s1: List[Fraction] = [Fraction(1)]
        while _poly_degree(r1) > 0:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
        constant = r1[0]
        return CycScalar(
            self.conductor, {k: c / constant for k, c in enumerate(s1) if c}
        )

    def __truediv__(self, other: Union["CycScalar", Rational]) -> "CycScalar":
        if not isinstance(other, CycScalar):
            other = _to_fraction(other)
            if not other:
                raise PoleError("division by zero")
            return self * (1 / other)
        return self * other.inverse()

    def __rtruediv__(self, other: Rational) -> "CycScalar":
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "CycScalar":
        if not isinstance(n, int):
            raise TypeError(f"`n` must be an int, but {type(n)} is given")
        if n < 0:
            return self.inverse() ** (-n)
        result = CycScalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CycScalar":
        """Complex conjugate (zeta_N -> zeta_N^{-1})."""
        n = self.conductor
        return CycScalar(n, {(n - k) % n: c for k, c in self.coeffs.items()})

    # predicates and conversions
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational number")
        return self.coeffs.get(0, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # normalized trace to Q is invariant under change of conductor
        n = self.conductor
        trace = Fraction(0)
        for k, c in self.coeffs.items():
            m = n // gcd(k, n)
            trace += c * Fraction(mobius(m), totient(m))
        return hash(trace)

    def __complex__(self) -> complex:
        n = self.conductor
        return sum(
            (
                float(c) * cmath.exp(2j * cmath.pi * k / n)
                for k, c in self.coeffs.items()
            ),
            0j,
        )

    def to_json(self) -> Dict[str, object]:
        z = complex(self)
        deg = totient(self.conductor)
        return {
            "conductor": self.conductor,
            "coeffs": [str(self.coeffs.get(k, Fraction(0))) for k in range(deg)],
            "approx": [z.real, z.imag],
        }

    @classmethod
    def from_json(cls, payload: Dict[str, object]) -> "CycScalar":
        coeffs = payload["coeffs"]
        return cls(
            int(payload["conductor"]),
            {k: Fraction(c) for k, c in enumerate(coeffs)},  # type: ignore
        )

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycScalar({self.to_fraction()})"
        terms = " + ".join(f"({c})*z^{k}" for k, c in sorted(self.coeffs.items()))
        return f"CycScalar[N={self.conductor}]({terms})"

    @classmethod
    def _raw(cls, conductor: int, coeffs: Dict[int, Fraction]) -> "CycScalar":
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = {k: c for k, c in coeffs.items() if c}
        return obj


def _poly_degree(poly: List[Fraction]) -> int:
    for k in range(len(poly) - 1, -1, -1):
        if poly[k]:
            return k
    return -1


def _poly_trim(poly: List[Fraction]) -> List[Fraction]:
    deg = _poly_degree(poly)
    return poly[: deg + 1] if deg >= 0 else [Fraction(0)]


def _poly_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    size = max(len(a), len(b))
    out = [Fraction(0)] * size
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] -= c
    return _poly_trim(out)


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(
    num: List[Fraction], den: List[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    num = _poly_trim(list(num))
    den = _poly_trim(den)
    dd = _poly_degree(den)
    lead = den[dd]
    quo = [Fraction(0)] * max(len(num) - dd, 1)
    while _poly_degree(num) >= dd:
        dn = _poly_degree(num)
        coef = num[dn] / lead
        quo[dn - dd] = coef
        for j in range(dd + 1):
            num[dn - dd + j] -= coef * den[j]
        num = _poly_trim(num)
    return _poly_trim(quo), num


@dataclass(frozen=True)
class RootExp:
    """Unit complex number e^{pi i r} with r stored reduced mod 2.

    Parameters
    ----------
    r: Fraction
        Exponent in units of pi i.

    """

    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", _to_fraction(self.r) % 2)

    def __mul__(self, other: "RootExp") -> "RootExp":
        return RootExp(self.r + other.r)

    def __truediv__(self, other: "RootExp") -> "RootExp":
        return RootExp(self.r - other.r)

    def __pow__(self, n: Rational) -> "RootExp":
        return RootExp(self.r * _to_fraction(n))

    def conjugate(self) -> "RootExp":
        return RootExp(-self.r)

    @property
    def conductor(self) -> int:
        """Least even conductor containing the root."""
        return 2 * self.r.denominator

    def to_cyc(self, conductor: int = None) -> CycScalar:
        return embed_rootexp(self.r, conductor or self.conductor)

    def __complex__(self) -> complex:
        return cmath.exp(1j * cmath.pi * float(self.r))

    def __str__(self) -> str:
        return f"e^(pi*i*{self.r})"


def embed_rootexp(r: Rational, conductor: int) -> CycScalar:
    """Realize e^{pi i r} as the element zeta_N^{rN/2} of Q(zeta_N).

    Parameters
    ----------
    r: Rational
        Exponent in units of pi i.

    conductor: int
        Even conductor N.

    Returns
    ----------
    value: CycScalar
        The reduced element.

    """
    r = _to_fraction(r)
    power = r * conductor / 2
    if power.denominator != 1:
        raise ConductorMismatchError(
            f"e^(pi*i*{r}) does not lie in Q(zeta_{conductor})"
        )
    return CycScalar(conductor, {int(power) % conductor: 1})


def common_conductor(values: Iterable[Union[CycScalar, RootExp, int]]) -> int:
    """Least common conductor of scalars, roots and explicit conductors."""
    n = 2
    for v in values:
        if isinstance(v, (CycScalar, RootExp)):
            n = _lcm(n, v.conductor)
        else:
            n = _lcm(n, _normalize_conductor(int(v)))
    return n


def qpow(x: Rational, p: int) -> CycScalar:
    """q^x with q = e^{pi i/p}."""
    return RootExp(_to_fraction(x) / p).to_cyc()


@lru_cache(maxsize=None)
def _qbrace(x: Fraction, p: int) -> CycScalar:
    return qpow(x, p) - qpow(-x, p)


def qbrace(x: Rational, p: int) -> CycScalar:
    """Quantum bracket {x} = q^x - q^{-x}."""
    return _qbrace(_to_fraction(x), p)


@lru_cache(maxsize=None)
def _qint(x: Fraction, p: int) -> CycScalar:
    return _qbrace(x, p) / _qbrace(Fraction(1), p)


def qint(x: Rational, p: int) -> CycScalar:
    """Quantum number [x] = {x}/{1}."""
    return _qint(_to_fraction(x), p)


@lru_cache(maxsize=None)
def qfactorial(n: int, p: int) -> CycScalar:
    """{n}! = {1}{2}...{n}."""
    result = CycScalar.one()
    for k in range(1, n + 1):
        result = result * qbrace(k, p)
    return result
