# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Truncated Bivariate Puiseux Series."""
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
import math
from typing import Dict
from typing import Iterator
from typing import Optional
from typing import Tuple
from typing import Union

import numpy as np
from scipy.special import comb
from sklearn.utils import check_scalar

from ..types import Rational
from ..types import TermKey
from ..utils import check_rational


# internal key: (q-exponent * denom, x-exponent)
_Key = Tuple[int, int]


def series_denominator(p: int) -> int:
    """Exponent denominator lcm(24, 4p, 2) used for every series at order p."""
    check_scalar(p, "p", int, min_val=2)
    return int(np.lcm.reduce([24, 4 * p, 2]))


def min_bound(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True, eq=False)
class PSeries:
    """Formal series sum c_{a,b} q^a x^b, truncated at q-exponent `cutoff`.

    Parameters
    ----------
    cutoff: Fraction
        Largest q-exponent retained.

    denom: int
        Every q-exponent has a denominator dividing `denom`.

    terms: dict
        Nonzero coefficients keyed by (q-exponent * denom, x-exponent).

    x_bound: int, default=None
        Largest x-exponent retained, set when a factor 1/(1-x^b) with no
        q-weight has been expanded in positive x-powers.

    """

    cutoff: Fraction
    denom: int
    terms: Dict[_Key, Rational] = field(default_factory=dict)
    x_bound: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "cutoff", check_rational(self.cutoff, "cutoff"))
        check_scalar(self.denom, "denom", int, min_val=1)
        top = self._scaled_cutoff
        kept = {
            k: c
            for k, c in self.terms.items()
            if c and k[0] <= top and (self.x_bound is None or k[1] <= self.x_bound)
        }
        object.__setattr__(self, "terms", kept)

    @property
    def _scaled_cutoff(self) -> int:
        return math.floor(self.cutoff * self.denom)

    def _scale(self, qexp: Rational) -> int:
        scaled = Fraction(qexp) * self.denom
        if scaled.denominator != 1:
            raise ValueError(
                f"q-exponent {qexp} must have a denominator dividing {self.denom}"
            )
        return int(scaled)

    @classmethod
    def zero(cls, cutoff: Rational, denom: int) -> "PSeries":
        return cls(cutoff=Fraction(cutoff), denom=denom)

    @classmethod
    def monomial(
        cls,
        qexp: Rational,
        xexp: int,
        cutoff: Rational,
        denom: int,
        coeff: Rational = 1,
    ) -> "PSeries":
        return cls.from_terms({(Fraction(qexp), xexp): coeff}, cutoff, denom)

    @classmethod
    def one(cls, cutoff: Rational, denom: int) -> "PSeries":
        return cls.monomial(0, 0, cutoff, denom)

    @classmethod
    def from_terms(
        cls, terms: Dict[TermKey, Rational], cutoff: Rational, denom: int
    ) -> "PSeries":
        """Series from a mapping (q-exponent, x-exponent) -> coefficient."""
        out = cls.zero(cutoff, denom)
        scaled: Dict[_Key, Rational] = defaultdict(int)
        for (qexp, xexp), c in terms.items():
            scaled[(out._scale(qexp), int(xexp))] += c
        return cls(cutoff=out.cutoff, denom=denom, terms=dict(scaled))

    def items(self) -> Iterator[Tuple[TermKey, Rational]]:
        """Terms ((q-exponent, x-exponent), coefficient) sorted by exponents."""
        for key in sorted(self.terms):
            yield (Fraction(key[0], self.denom), key[1]), self.terms[key]

    def coefficient(self, qexp: Rational, xexp: int) -> Rational:
        return self.terms.get((self._scale(qexp), xexp), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> Tuple[TermKey, Rational]:
        """Lexicographically minimal (q-exponent, x-exponent) term."""
        if not self.terms:
            raise ValueError("a zero series has no leading term")
        key = min(self.terms)
        return (Fraction(key[0], self.denom), key[1]), self.terms[key]

    def x_range(self, qexp: Rational) -> Tuple[int, int]:
        """Smallest and largest x-exponent at a q-exponent."""
        scaled = self._scale(qexp)
        xs = [x for q, x in self.terms if q == scaled]
        if not xs:
            raise ValueError(f"no terms at q-exponent {qexp}")
        return min(xs), max(xs)

    def truncate(self, cutoff: Rational) -> "PSeries":
        cutoff = min(check_rational(cutoff, "cutoff"), self.cutoff)
        return PSeries(
            cutoff=cutoff, denom=self.denom, terms=self.terms, x_bound=self.x_bound
        )

    def shift(self, qexp: Rational, xexp: int = 0) -> "PSeries":
        """Multiply by q^qexp x^xexp; the cutoff moves with the terms."""
        dq = self._scale(qexp)
        terms = {(q + dq, x + xexp): c for (q, x), c in self.terms.items()}
        x_bound = None if self.x_bound is None else self.x_bound + xexp
        return PSeries(
            cutoff=self.cutoff + Fraction(qexp),
            denom=self.denom,
            terms=terms,
            x_bound=x_bound,
        )

    def _check_compatible(self, other: "PSeries") -> None:
        if self.denom != other.denom:
            raise ValueError(
                f"series must share `denom`, but {self.denom} and {other.denom} "
                "are given"
            )

    def __add__(self, other: "PSeries") -> "PSeries":
        self._check_compatible(other)
        terms: Dict[_Key, Rational] = defaultdict(int, self.terms)
        for k, c in other.terms.items():
            terms[k] += c
        return PSeries(
            cutoff=min(self.cutoff, other.cutoff),
            denom=self.denom,
            terms=dict(terms),
            x_bound=min_bound(self.x_bound, other.x_bound),
        )

    def __neg__(self) -> "PSeries":
        terms = {k: -c for k, c in self.terms.items()}
        return PSeries(
            cutoff=self.cutoff, denom=self.denom, terms=terms, x_bound=self.x_bound
        )

    def __sub__(self, other: "PSeries") -> "PSeries":
        return self + (-other)

    def scale(self, c: Rational) -> "PSeries":
        terms = {k: v * c for k, v in self.terms.items()}
        return PSeries(
            cutoff=self.cutoff, denom=self.denom, terms=terms, x_bound=self.x_bound
        )

    def __mul__(self, other: Union["PSeries", Rational]) -> "PSeries":
        """Truncated product.

        Both factors must have non-negative q-exponents, so that the
        truncated product equals the truncation of the exact product.
        """
        if not isinstance(other, PSeries):
            return self.scale(other)
        self._check_compatible(other)
        if self.terms and other.terms:
            if min(q for q, _ in self.terms) < 0 or min(q for q, _ in other.terms) < 0:
                raise ValueError("truncated products need non-negative q-exponents")
        cutoff = min(self.cutoff, other.cutoff)
        top = math.floor(cutoff * self.denom)
        x_bound = min_bound(self.x_bound, other.x_bound)
        terms: Dict[_Key, Rational] = defaultdict(int)
        right = sorted(other.terms.items())
        for (q1, x1), c1 in self.terms.items():
            for (q2, x2), c2 in right:
                if q1 + q2 > top:
                    break
                terms[(q1 + q2, x1 + x2)] += c1 * c2
        return PSeries(
            cutoff=cutoff, denom=self.denom, terms=dict(terms), x_bound=x_bound
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PSeries):
            return NotImplemented
        cutoff = min(self.cutoff, other.cutoff)
        return self.truncate(cutoff).terms == other.truncate(cutoff).terms

    def __str__(self) -> str:
        if not self.terms:
            return f"0 + O(q^{self.cutoff})"
        body = " + ".join(f"({c})q^{a}x^{b}" for (a, b), c in self.items())
        return f"{body} + O(q^{self.cutoff})"


def factor_series(
    b: int,
    e: Rational,
    mult: int,
    cutoff: Rational,
    denom: int,
    x_bound: Optional[int] = None,
) -> PSeries:
    """Expansion of (1 - x^b q^e)^mult.

    The factor must be normalized: e > 0, or e = 0 with b > 0. Positive
    powers are expanded by the binomial theorem, negative powers by the
    negative binomial series; with e = 0 the x-powers are kept up to
    `x_bound`.

    Raises
    ----------
    ValueError
        For an unnormalized factor, or e = 0 with a negative power and no
        `x_bound`.

    """
    e = check_rational(e, "e")
    check_scalar(mult, "mult", int)
    if e < 0 or (e == 0 and b <= 0):
        raise ValueError(f"factor (1 - x^{b} q^{e}) must be normalized")
    out = PSeries.zero(cutoff, denom)
    if mult == 0:
        return PSeries.one(cutoff, denom)
    step = out._scale(e)
    top = out._scaled_cutoff
    terms: Dict[_Key, Rational] = {}
    if mult > 0:
        for k in range(mult + 1):
            if k * step > top:
                break
            terms[(k * step, k * b)] = (-1) ** k * int(comb(mult, k, exact=True))
        return PSeries(cutoff=out.cutoff, denom=denom, terms=terms)
    if step == 0 and x_bound is None:
        raise ValueError("`x_bound` must be given to expand 1/(1 - x^b) in x")
    k = 0
    while k * step <= top and (step > 0 or k * b <= x_bound):
        terms[(k * step, k * b)] = int(comb(-mult + k - 1, k, exact=True))
        k += 1
    x_bound = x_bound if step == 0 else None
    return PSeries(cutoff=out.cutoff, denom=denom, terms=terms, x_bound=x_bound)


def euler_product(m: int, cutoff: Rational, denom: int) -> PSeries:
    """prod_{k>=1} (1 - q^{mk})."""
    check_scalar(m, "m", int, min_val=1)
    out = PSeries.one(cutoff, denom)
    k = 1
    while m * k <= out.cutoff:
        out = out * factor_series(0, m * k, 1, cutoff, denom)
        k += 1
    return out
