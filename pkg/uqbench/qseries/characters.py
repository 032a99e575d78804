# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Product, Reduction and Spectral-Flow Characters."""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
import math
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from sklearn.utils import check_scalar

from ..report import CheckReport
from ..scalars import RootExp
from ..types import Rational
from ..types import TermKey
from ..utils import check_p
from ..utils import check_rational
from .equivalence import equiv_check
from .products import Ledger
from .products import ProductForm
from .products import QCharacter
from .products import theta01_form
from .products import theta11_form
from .series import euler_product
from .series import factor_series
from .series import PSeries
from .series import series_denominator


logger = getLogger(__name__)

Root = Tuple[int, int]


@dataclass(frozen=True)
class RootDatum:
    """Positive roots of sl_n, n = p - 1, evaluated on the reduction data H and K.

    Parameters
    ----------
    p: int
        Order parameter, at least 3.

    """

    p: int

    def __post_init__(self) -> None:
        check_scalar(self.p, "p", int, min_val=3)

    @property
    def n(self) -> int:
        return self.p - 1

    @property
    def positive_roots(self) -> List[Root]:
        """Roots alpha_{i,j}, 1 <= i <= j <= n-1."""
        return [(i, j) for i in range(1, self.n) for j in range(i, self.n)]

    def k_value(self, root: Root) -> int:
        """Coefficient of v in alpha(K)."""
        return 1 if root[1] == self.n - 1 else 0

    def h_value(self, root: Root) -> Fraction:
        i, j = root
        if j < self.n - 1:
            return Fraction(j - i + 1)
        return Fraction(self.n, 2) - i

    def argument(self, root: Root, sign: int = 1) -> Tuple[int, Fraction]:
        """(b, a) with sign * alpha(K - tau H) encoded as u = x^b q^a."""
        return sign * self.k_value(root), -sign * self.h_value(root)

    @property
    def zero_roots(self) -> List[Root]:
        """Positive roots vanishing on H; {alpha_{n/2,n-1}} for even n."""
        return [r for r in self.positive_roots if self.h_value(r) == 0]

    @property
    def half_roots(self) -> List[Tuple[int, Root]]:
        """Signed roots (sign, alpha) with sign * alpha(H) = 1/2, for odd n."""
        half = Fraction(1, 2)
        out = []
        for sign in (1, -1):
            out.extend(
                (sign, r) for r in self.positive_roots if sign * self.h_value(r) == half
            )
        return out


def kw_form(p: int, cutoff: Rational) -> ProductForm:
    """Reduction character as a formal product built from the root datum.

    (-i)^{p(p+1)/2} q^{(p^2-1)(p-2)/24} eta(p tau)^{-(p-2)(p-3)/2} /
    eta(tau)^{p-3} prod_{alpha > 0} theta_11(p tau, alpha(K - tau H)),
    divided by theta_11(tau, alpha(K)) over the roots vanishing on H and by
    the square root of the theta_01 product over the half roots.
    """
    datum = RootDatum(p)
    cutoff = check_rational(cutoff, "cutoff")
    prefactor = ProductForm.build(
        Ledger(
            phase=RootExp(Fraction(-p * (p + 1), 4)),
            qshift=Fraction((p * p - 1) * (p - 2), 24),
        ),
        eta={p: -(p - 2) * (p - 3) // 2, 1: -(p - 3)},
    )
    form = prefactor
    for root in datum.positive_roots:
        b, a = datum.argument(root)
        form = form * theta11_form(p, b, a, cutoff)
    for root in datum.zero_roots:
        form = form / theta11_form(1, datum.k_value(root), 0, cutoff)
    if datum.half_roots:
        half = ProductForm()
        for sign, root in datum.half_roots:
            half = half * theta01_form(1, sign * datum.k_value(root), 0, cutoff)
        form = form / half.sqrt()
    return form


def char_kw(p: int, cutoff: Rational, denom: Optional[int] = None) -> QCharacter:
    """Expanded reduction character at order p >= 3."""
    denom = denom or series_denominator(p)
    return kw_form(p, cutoff).expand(cutoff, denom)


def final_kw_product(p: int, cutoff: Rational) -> ProductForm:
    """Closed product the reduction character collapses to.

    eta(p tau)^2 / eta(tau)^2 prod_{k>=0} (1 - q^{pk+1}) (1 - q^{p(k+1)-1}) /
    (1 - x^{+-1} q^{p(k+1/2)+1/2}) (1 - x^{+-1} q^{p(k+1/2)-1/2}); the same
    product arises for both parities of p.
    """
    check_p(p)
    cutoff = check_rational(cutoff, "cutoff")
    factors: Dict[Tuple[int, Rational], int] = defaultdict(int)
    k = 0
    while p * k + 1 <= cutoff or p * k + Fraction(p - 1, 2) <= cutoff:
        for e in (p * k + 1, p * (k + 1) - 1):
            if e <= cutoff:
                factors[(0, e)] += 1
        for e in (p * k + Fraction(p - 1, 2), p * k + Fraction(p + 1, 2)):
            if e <= cutoff:
                factors[(1, e)] -= 1
                factors[(-1, e)] -= 1
        k += 1
    return ProductForm.build(Ledger(), {p: 2, 1: -2}, factors)


def _inverse_euler_squared(cutoff: Fraction, denom: int) -> PSeries:
    out = PSeries.one(cutoff, denom)
    k = 1
    while k <= cutoff:
        out = out * factor_series(0, k, -2, cutoff, denom)
        k += 1
    return out


def char_bp_product(
    p: int, cutoff: Rational, denom: Optional[int] = None
) -> QCharacter:
    """Product character of B_p expanded factor by factor.

    The ledger carries q^{(p-1)/12} from eta(p tau)^2 / eta(tau)^2; every
    x-dependent denominator has positive q-weight.
    """
    check_p(p)
    cutoff = check_rational(cutoff, "cutoff")
    denom = denom or series_denominator(p)
    euler = euler_product(p, cutoff, denom)
    body = euler * euler * _inverse_euler_squared(cutoff, denom)
    k = 0
    while p * k + 1 <= cutoff or p * k + Fraction(p - 1, 2) <= cutoff:
        for e in (p * k + 1, p * (k + 1) - 1):
            body = body * factor_series(0, e, 1, cutoff, denom)
        for e in (p * k + Fraction(p - 1, 2), p * k + Fraction(p + 1, 2)):
            for b in (1, -1):
                body = body * factor_series(b, e, -1, cutoff, denom)
        k += 1
    return QCharacter(body, Ledger(qshift=Fraction(p - 1, 12)))


def _geometric_terms(
    qexp: Fraction, e: Fraction, cutoff: Fraction, x_bound: int
) -> Dict[TermKey, int]:
    """q^qexp / (1 - x q^e), expanded in x for e > 0 and in x^{-1} for e < 0."""
    terms: Dict[TermKey, int] = {}
    if e == 0:
        for r in range(x_bound + 1):
            terms[(qexp, r)] = 1
        return terms
    if e > 0:
        r = 0
        while qexp + r * e <= cutoff:
            terms[(qexp + r * e, r)] = 1
            r += 1
        return terms
    r = 1
    while qexp - r * e <= cutoff:
        terms[(qexp - r * e, -r)] = -1
        r += 1
    return terms


def char_sigma_w(
    s: int,
    s_prime: int,
    p: int,
    cutoff: Rational,
    denom: Optional[int] = None,
    x_bound: int = 20,
) -> QCharacter:
    """Character of sigma^{s'}(W_s) as a truncated series.

    The body is sum_n [T(n, -) - T(n, +)] / prod (1 - q^k)^2 with
    T(n, +-) = q^{(2pn + p +- s)^2 / 4p} / (1 - x q^{(2pn + p +- s + s')/2});
    the ledger carries q^{s'^2/4p - s'^2/2 - 1/12} x^{s'/p - 2s'}. A pole
    factor 1/(1 - x) is expanded in positive x-powers up to `x_bound`.
    """
    check_p(p)
    check_scalar(s, "s", int)
    check_scalar(s_prime, "s_prime", int)
    check_scalar(x_bound, "x_bound", int, min_val=0)
    cutoff = check_rational(cutoff, "cutoff")
    denom = denom or series_denominator(p)
    reach = 2 * math.sqrt(p * float(cutoff)) + abs(s) + p
    n_low = math.floor(-reach / (2 * p)) - 1
    n_high = math.ceil(reach / (2 * p)) + 1
    terms: Dict[TermKey, int] = defaultdict(int)
    pole = False
    for n in range(n_low, n_high + 1):
        for sign, weight in ((-1, 1), (1, -1)):
            shift = 2 * p * n + p + sign * s
            qexp = Fraction(shift * shift, 4 * p)
            if qexp > cutoff:
                continue
            e = Fraction(shift + s_prime, 2)
            pole = pole or e == 0
            for key, c in _geometric_terms(qexp, e, cutoff, x_bound).items():
                terms[key] += weight * c
    body = PSeries.from_terms(dict(terms), cutoff, denom)
    if pole:
        body = PSeries(body.cutoff, denom, body.terms, x_bound=x_bound)
    body = body * _inverse_euler_squared(body.cutoff, denom)
    ledger = Ledger(
        qshift=Fraction(s_prime * s_prime, 4 * p)
        - Fraction(s_prime * s_prime, 2)
        - Fraction(1, 12),
        xshift=Fraction(s_prime, p) - 2 * s_prime,
    )
    return QCharacter(body, ledger)


def _equiv_witness(first: QCharacter, second: QCharacter) -> Tuple[bool, Dict]:
    equal, gamma, a, b = equiv_check(first, second)
    return equal, {"gamma": gamma, "a": str(a), "b": str(b)}


def qh_character_check(
    p: int, cutoff: Rational = 10, denom: Optional[int] = None
) -> CheckReport:
    """Reduction character against the product character of B_p.

    Rows compare the root-datum route with the direct product route up to
    gamma q^a x^b, verify that the reduction product collapses to
    `final_kw_product`, and compare the spectral-flow character of W_1 with
    the product. The reduction rows need p >= 3.
    """
    check_p(p)
    cutoff = check_rational(cutoff, "cutoff")
    denom = denom or series_denominator(p)
    report = CheckReport(name=f"qh_character[p={p},D={cutoff}]")
    bp = char_bp_product(p, cutoff, denom)
    (lead, _), coeff = bp.series.leading()
    report.add("product leading term", lead == 0 and coeff == 1, str(lead))
    if p >= 3:
        kw = char_kw(p, cutoff, denom)
        report.add("reduction ~ product", *_equiv_witness(kw, bp))
        ratio = kw_form(p, cutoff).collapsed(cutoff) / final_kw_product(
            p, cutoff
        ).collapsed(cutoff)
        report.add("collapsed reduction product", ratio.is_trivial(), str(ratio))
    else:
        logger.info(f"reduction character needs p >= 3, skipping it at p={p}")
    sigma = char_sigma_w(1, 0, p, cutoff, denom)
    report.add("sigma^0(W_1) ~ product", *_equiv_witness(sigma, bp))
    return report


def sigma_relations_check(
    p: int, cutoff: Rational = 10, denom: Optional[int] = None
) -> CheckReport:
    """ch[sigma^{s'}(W_0)] = 0 and ch[sigma^{s'}(W_s)] + ch[sigma^{s'}(W_{-s})] = 0."""
    check_p(p)
    denom = denom or series_denominator(p)
    report = CheckReport(name=f"sigma_relations[p={p},D={cutoff}]")
    for s_prime in range(p):
        zero = char_sigma_w(0, s_prime, p, cutoff, denom)
        report.add(f"W_0 s'={s_prime}", zero.is_zero(), len(zero.series.terms))
        for s in range(1, p):
            total = (
                char_sigma_w(s, s_prime, p, cutoff, denom).series
                + char_sigma_w(-s, s_prime, p, cutoff, denom).series
            )
            report.add(
                f"W_{s} + W_-{s} s'={s_prime}", total.is_zero(), len(total.terms)
            )
    return report
