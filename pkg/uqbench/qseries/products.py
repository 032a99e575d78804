# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Product Forms, Eta and Theta Functions."""
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from logging import getLogger
from typing import Dict
from typing import Optional
from typing import Tuple

from sklearn.utils import check_scalar

from ..exceptions import PoleError
from ..scalars import CycScalar
from ..scalars import RootExp
from ..types import Rational
from ..utils import check_rational
from .series import euler_product
from .series import factor_series
from .series import PSeries


logger = getLogger(__name__)

# factor (1 - x^b q^e) keyed by (b, e)
FactorKey = Tuple[int, Fraction]


def _fmt(value: Rational) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class Ledger:
    """Prefactor phase * q^qshift * x^xshift kept outside the rational series.

    Parameters
    ----------
    phase: RootExp, default=RootExp(0)
        Root of unity e^{pi i r}.

    qshift: Fraction, default=0
        Exponent of q.

    xshift: Fraction, default=0
        Exponent of x; may be fractional.

    """

    phase: RootExp = RootExp(0)
    qshift: Fraction = Fraction(0)
    xshift: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "qshift", check_rational(self.qshift, "qshift"))
        object.__setattr__(self, "xshift", check_rational(self.xshift, "xshift"))

    def __mul__(self, other: "Ledger") -> "Ledger":
        return Ledger(
            phase=self.phase * other.phase,
            qshift=self.qshift + other.qshift,
            xshift=self.xshift + other.xshift,
        )

    def __pow__(self, n: Rational) -> "Ledger":
        return Ledger(
            phase=self.phase ** n, qshift=self.qshift * n, xshift=self.xshift * n
        )

    def constant(self) -> CycScalar:
        return self.phase.to_cyc()

    def __str__(self) -> str:
        return f"phase={self.phase}, qshift={self.qshift}, xshift={self.xshift}"


@dataclass(frozen=True)
class QCharacter:
    """Series body together with its prefactor ledger.

    The represented character is ledger * series.
    """

    series: PSeries
    ledger: Ledger = field(default_factory=Ledger)
    form: Optional["ProductForm"] = None

    def is_zero(self) -> bool:
        return self.series.is_zero()


@dataclass(frozen=True)
class ProductForm:
    """Formal product ledger * prod eta(m tau)^E * prod (1 - x^b q^e)^mult.

    Parameters
    ----------
    ledger: Ledger
        Prefactor.

    eta: tuple of (int, int)
        Pairs (m, E) for eta(m tau)^E, sorted by m.

    factors: tuple of ((int, Fraction), int)
        Pairs ((b, e), mult) for (1 - x^b q^e)^mult, sorted by (b, e).

    """

    ledger: Ledger = field(default_factory=Ledger)
    eta: Tuple[Tuple[int, int], ...] = ()
    factors: Tuple[Tuple[FactorKey, int], ...] = ()

    @classmethod
    def build(
        cls,
        ledger: Optional[Ledger] = None,
        eta: Optional[Dict[int, int]] = None,
        factors: Optional[Dict[Tuple[int, Rational], int]] = None,
    ) -> "ProductForm":
        eta_ = tuple(sorted((m, e) for m, e in (eta or {}).items() if e))
        merged: Dict[FactorKey, int] = defaultdict(int)
        for (b, e), mult in (factors or {}).items():
            merged[(int(b), Fraction(e))] += mult
        factors_ = tuple(sorted((k, m) for k, m in merged.items() if m))
        return cls(ledger=ledger or Ledger(), eta=eta_, factors=factors_)

    def __mul__(self, other: "ProductForm") -> "ProductForm":
        eta: Dict[int, int] = defaultdict(int, dict(self.eta))
        for m, e in other.eta:
            eta[m] += e
        factors: Dict[FactorKey, int] = defaultdict(int, dict(self.factors))
        for key, mult in other.factors:
            factors[key] += mult
        return ProductForm.build(self.ledger * other.ledger, eta, factors)

    def __pow__(self, n: int) -> "ProductForm":
        check_scalar(n, "n", int)
        return ProductForm.build(
            self.ledger ** n,
            {m: e * n for m, e in self.eta},
            {k: mult * n for k, mult in self.factors},
        )

    def __truediv__(self, other: "ProductForm") -> "ProductForm":
        return self * other ** -1

    def sqrt(self) -> "ProductForm":
        """Square root of a product whose eta powers and multiplicities are even."""
        odd = [m for m, e in self.eta if e % 2] + [k for k, m in self.factors if m % 2]
        if odd:
            raise ValueError(f"product is not a perfect square, odd powers at {odd}")
        return ProductForm.build(
            self.ledger ** Fraction(1, 2),
            {m: e // 2 for m, e in self.eta},
            {k: mult // 2 for k, mult in self.factors},
        )

    def normalized(self) -> "ProductForm":
        """Rewrite factors with e < 0, or e = 0 and b < 0, with positive exponents.

        (1 - x^b q^e)^m = (-1)^m x^{bm} q^{em} (1 - x^{-b} q^{-e})^m.
        """
        ledger = self.ledger
        factors: Dict[FactorKey, int] = defaultdict(int)
        for (b, e), mult in self.factors:
            if e < 0 or (e == 0 and b < 0):
                ledger = ledger * Ledger(
                    phase=RootExp(mult), qshift=e * mult, xshift=b * mult
                )
                factors[(-b, -e)] += mult
            else:
                factors[(b, e)] += mult
        return ProductForm.build(ledger, dict(self.eta), factors)

    def with_eta_expanded(self, cutoff: Rational) -> "ProductForm":
        """Replace eta(m tau)^E by q^{mE/24} prod_{mk <= cutoff} (1 - q^{mk})^E."""
        cutoff = check_rational(cutoff, "cutoff")
        qshift = Fraction(0)
        factors: Dict[FactorKey, int] = defaultdict(int, dict(self.factors))
        for m, power in self.eta:
            qshift += Fraction(m * power, 24)
            k = 1
            while m * k <= cutoff:
                factors[(0, Fraction(m * k))] += power
                k += 1
        return ProductForm.build(self.ledger * Ledger(qshift=qshift), {}, factors)

    def truncated(self, cutoff: Rational) -> "ProductForm":
        """Drop normalized factors of q-weight above `cutoff`."""
        kept = {k: m for k, m in self.factors if k[1] <= cutoff}
        return ProductForm.build(self.ledger, dict(self.eta), kept)

    def collapsed(self, cutoff: Rational) -> "ProductForm":
        return self.with_eta_expanded(cutoff).normalized().truncated(cutoff)

    def is_trivial(self) -> bool:
        return not self.eta and not self.factors

    def expand(
        self, cutoff: Rational, denom: int, x_bound: Optional[int] = None
    ) -> QCharacter:
        """Expand the collapsed product to a series truncated at `cutoff`.

        Raises
        ----------
        PoleError
            When the factor (1 - 1) appears with a negative power.

        """
        form = self.collapsed(cutoff)
        factors = dict(form.factors)
        vanishing = factors.pop((0, Fraction(0)), 0)
        if vanishing < 0:
            raise PoleError("product has the factor (1 - 1) in its denominator")
        if vanishing > 0:
            return QCharacter(PSeries.zero(cutoff, denom), form.ledger, form)
        series = PSeries.one(cutoff, denom)
        for (b, e), mult in sorted(factors.items()):
            series = series * factor_series(b, e, mult, cutoff, denom, x_bound=x_bound)
        logger.debug(f"expanded {len(factors)} factors to {len(series.terms)} terms")
        return QCharacter(series, form.ledger, form)

    def __str__(self) -> str:
        parts = [
            f"{self.ledger.phase} q^{{{_fmt(self.ledger.qshift)}}} "
            f"x^{{{_fmt(self.ledger.xshift)}}}"
        ]
        parts.extend(f"eta({m}tau)^{e}" for m, e in self.eta)
        parts.extend(f"(1 - x^{b} q^{{{_fmt(e)}}})^{m}" for (b, e), m in self.factors)
        return " * ".join(parts)


def eta_factor(m: int, cutoff: Rational, denom: int) -> PSeries:
    """eta(m tau) = q^{m/24} prod_{k>=1} (1 - q^{mk}), truncated at `cutoff`."""
    check_scalar(m, "m", int, min_val=1)
    shift = Fraction(m, 24)
    cutoff = check_rational(cutoff, "cutoff")
    return euler_product(m, cutoff - shift, denom).shift(shift)


def eta_form(m: int, power: int = 1) -> ProductForm:
    return ProductForm.build(eta={m: power})


def theta11_form(m: int, b: int, a: Rational, cutoff: Rational) -> ProductForm:
    """theta_11(m tau, z) with u = e^{2 pi i z} = x^b q^a.

    theta_11(tau, z) = -i q^{1/12} u^{-1/2} eta(tau) prod_{k>=1} (1 - u^{-1} q^k)
    (1 - u q^{k-1}); here q is replaced by q^m. Factors of q-weight above
    `cutoff` are left out.
    """
    check_scalar(m, "m", int, min_val=1)
    check_scalar(b, "b", int)
    a = check_rational(a, "a")
    cutoff = check_rational(cutoff, "cutoff")
    ledger = Ledger(
        phase=RootExp(Fraction(-1, 2)),
        qshift=Fraction(m, 12) - a / 2,
        xshift=Fraction(-b, 2),
    )
    factors: Dict[Tuple[int, Rational], int] = defaultdict(int)
    k = 1
    while m * k - a <= cutoff or m * (k - 1) + a <= cutoff:
        if m * k - a <= cutoff:
            factors[(-b, m * k - a)] += 1
        if m * (k - 1) + a <= cutoff:
            factors[(b, m * (k - 1) + a)] += 1
        k += 1
    return ProductForm.build(ledger, {m: 1}, factors)


def theta01_form(m: int, b: int, a: Rational, cutoff: Rational) -> ProductForm:
    """theta_01(m tau, z) with u = x^b q^a.

    prod_{k>=1} (1 - u^{-1} q^{m(k-1/2)}) (1 - q^{mk}) (1 - u q^{m(k-1/2)}).
    """
    check_scalar(m, "m", int, min_val=1)
    check_scalar(b, "b", int)
    a = check_rational(a, "a")
    cutoff = check_rational(cutoff, "cutoff")
    factors: Dict[Tuple[int, Rational], int] = defaultdict(int)
    k = 1
    half = Fraction(1, 2)
    while m * (k - half) - abs(a) <= cutoff:
        if m * (k - half) - a <= cutoff:
            factors[(-b, m * (k - half) - a)] += 1
        if m * k <= cutoff:
            factors[(0, m * k)] += 1
        if m * (k - half) + a <= cutoff:
            factors[(b, m * (k - half) + a)] += 1
        k += 1
    return ProductForm.build(Ledger(), {}, factors)


def theta11(
    m: int, arg: Tuple[int, Rational], cutoff: Rational, denom: int
) -> QCharacter:
    """Expanded theta_11(m tau, z) with u = x^b q^a given as arg = (b, a)."""
    b, a = arg
    return theta11_form(m, b, a, cutoff).expand(cutoff, denom)


def theta01(
    m: int, arg: Tuple[int, Rational], cutoff: Rational, denom: int
) -> QCharacter:
    """Expanded theta_01(m tau, z) with u = x^b q^a given as arg = (b, a)."""
    b, a = arg
    return theta01_form(m, b, a, cutoff).expand(cutoff, denom)
