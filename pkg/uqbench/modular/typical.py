# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Character S-Matrix of Typical Modules and Its Comparison with Hopf Links."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from logging import getLogger
import math
from typing import List
from typing import Optional
from typing import Tuple

from sklearn.utils import check_random_state
from sklearn.utils import check_scalar
from tqdm import tqdm

from ..deligne import es
from ..deligne import ev
from ..deligne import ExtLabel
from ..deligne import hopf_ext
from ..deligne import nu_ell
from ..exceptions import PoleError
from ..qmodules import is_typical
from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qpow
from ..scalars import RootExp
from ..types import Rational
from ..utils import check_p
from ..utils import check_rational
from ..utils import rational_grid


logger = getLogger(__name__)


def _window(nu: Fraction) -> Fraction:
    """Representative of nu modulo 2 in (-1, 1]; nu moves by 2 under a shift."""
    return nu - 2 * math.ceil((nu - 1) / 2)


@dataclass(frozen=True)
class TypicalIndex:
    """Coordinates (nu, l) of the typical module E_{nu,l}.

    Parameters
    ----------
    nu: Fraction
        nu = 2 alpha / p, reduced to the window (-1, 1].

    ell: Fraction
        l = (c + alpha) / 2, with l + (p-1)/2 an integer.

    p: int
        Order parameter.

    """

    nu: Fraction
    ell: Fraction
    p: int

    def __post_init__(self) -> None:
        check_p(self.p)
        object.__setattr__(self, "nu", check_rational(self.nu, "nu"))
        object.__setattr__(self, "ell", check_rational(self.ell, "ell"))
        if not -1 < self.nu <= 1:
            raise ValueError(f"`nu` must be in (-1, 1], but {self.nu} is given")
        if (self.ell + Fraction(self.p - 1, 2)).denominator != 1:
            raise ValueError(
                f"`ell + (p-1)/2` must be an integer, but {self.ell} is given"
            )
        if not is_typical(self.alpha, self.p):
            raise ValueError(
                f"`nu` must give a typical weight, but alpha = {self.alpha} is given"
            )

    @property
    def alpha(self) -> Fraction:
        return self.p * self.nu / 2

    @property
    def charge(self) -> Fraction:
        return 2 * self.ell - self.alpha

    def label(self) -> ExtLabel:
        """EV label of the module, with the weight in the window."""
        return ev(self.charge, self.alpha, self.p)

    @classmethod
    def from_label(cls, label: ExtLabel) -> "TypicalIndex":
        """Index of an EV label; l is unchanged by simple-current shifts."""
        nu, ell = nu_ell(label)
        return cls(nu=_window(nu), ell=ell, p=label.p)

    def __str__(self) -> str:
        return f"(nu={self.nu},l={self.ell})"


def s_chi_exponent(a: TypicalIndex, b: TypicalIndex) -> Fraction:
    """Exponent r of the phase e^{pi i r} = e^{pi i (4 l l'/p - l nu' - l' nu)}."""
    return 4 * a.ell * b.ell / a.p - a.ell * b.nu - b.ell * a.nu


def s_chi_typical(a: TypicalIndex, b: TypicalIndex, p: int) -> CycScalar:
    """Phase part of the character S-matrix between two typical modules.

    The prefactor |tau|/(-i tau) and the global 1/2 are dropped.
    """
    if a.p != p or b.p != p:
        raise ValueError(f"indices must share `p` = {p}, but {a.p} and {b.p} are given")
    return RootExp(s_chi_exponent(a, b)).to_cyc()


def s_chi_unit_typical(nu_prime: Rational, p: int) -> CycScalar:
    """Abel-regularized unit entry (x - x^{-1}) / (x^p - x^{-p}), x = e^{pi i nu'/2}.

    Raises
    ----------
    PoleError
        When nu' lies in (2/p)Z, where x^p = x^{-p}.

    """
    check_p(p)
    nu_prime = check_rational(nu_prime, "nu_prime")
    if (nu_prime * p / 2).denominator == 1:
        raise PoleError(f"`nu_prime` must avoid (2/p)Z, but {nu_prime} is given")
    x = RootExp(nu_prime / 2)
    numerator = x.to_cyc() - x.conjugate().to_cyc()
    denominator = (x ** p).to_cyc() - (x ** p).conjugate().to_cyc()
    return numerator / denominator


def unit_quotient(nu_prime: Rational, p: int) -> CycScalar:
    """(x^p - x^{-p}) / (x - x^{-1}) = sum_j x^{p-1-2j}, regular on the pole set."""
    x = RootExp(Fraction(nu_prime) / 2)
    acc = CycScalar.zero()
    for j in range(p):
        acc = acc + (x ** (p - 1 - 2 * j)).to_cyc()
    return acc


def s_chi_typical_ratio(a: TypicalIndex, b: TypicalIndex, p: int) -> CycScalar:
    """Normalized character ratio S^chi_{a,b} / S^chi_{1,b}."""
    return s_chi_typical(a, b, p) * unit_quotient(b.nu, p)


def hopf_typical_ratio(a: ExtLabel, b: ExtLabel) -> CycScalar:
    """Normalized Hopf ratio S_{a,b} / S_{1,b} computed from the R-matrix."""
    unit = es(0, 0, 0, b.p)
    return hopf_ext(a, b) / hopf_ext(unit, b)


def typical_hopf_closed_form(a: ExtLabel, b: ExtLabel) -> CycScalar:
    """(-1)^{p-1} p q^{alpha1 alpha2} times the Fock Hopf scalar q^{-c1 c2}."""
    p = a.p
    sign = -1 if (p - 1) % 2 else 1
    return qpow(a.alpha * b.alpha - a.c * b.c, p) * (sign * p)


def typical_indices(
    p: int, den_bound: int = 4, charge_bound: int = 1
) -> List[TypicalIndex]:
    """Typical indices with weights of bounded denominator in the window.

    Parameters
    ----------
    den_bound: int, default=4
        Largest denominator of alpha.

    charge_bound: int, default=1
        l ranges over the admissible values with |l| <= charge_bound + 1/2.

    """
    check_p(p)
    check_scalar(charge_bound, "charge_bound", int, min_val=0)
    half = Fraction(p, 2)
    out = []
    for alpha in rational_grid(den_bound, -half, half):
        if alpha == -half or not is_typical(alpha, p):
            continue
        nu = 2 * alpha / p
        for k in range(-2 * charge_bound - 1, 2 * charge_bound + 2):
            ell = Fraction(k, 2)
            if (ell + Fraction(p - 1, 2)).denominator == 1:
                out.append(TypicalIndex(nu=nu, ell=ell, p=p))
    return out


def typical_pairs(
    p: int, size: int = 60, den_bound: int = 4, random_state: Optional[int] = 12345
) -> List[Tuple[TypicalIndex, TypicalIndex]]:
    """Deterministic sample of typical index pairs."""
    check_scalar(size, "size", int, min_val=1)
    indices = typical_indices(p, den_bound=den_bound)
    pairs = list(product(indices, repeat=2))
    if size >= len(pairs):
        return pairs
    random_ = check_random_state(random_state)
    chosen = sorted(random_.choice(len(pairs), size=size, replace=False))
    return [pairs[k] for k in chosen]


def check_typical_comparison(
    p: int,
    pairs: Optional[List[Tuple[TypicalIndex, TypicalIndex]]] = None,
    size: int = 60,
    den_bound: int = 4,
    random_state: Optional[int] = 12345,
    show_progress: bool = False,
) -> CheckReport:
    """Compare the conjugated character ratio with the Hopf ratio on typical pairs.

    Each row asserts conj(S^chi_{a,b} / S^chi_{1,b}) = S_{a,b} / S_{1,b}
    exactly, and that the Hopf link agrees with its closed form.
    """
    check_p(p)
    if pairs is None:
        pairs = typical_pairs(
            p, size=size, den_bound=den_bound, random_state=random_state
        )
    report = CheckReport(name=f"typical_comparison[p={p}]")
    logger.info(f"comparing {len(pairs)} typical pairs at p={p}")
    for a, b in tqdm(pairs, desc="typical", disable=not show_progress):
        la, lb = a.label(), b.label()
        chi = s_chi_typical_ratio(a, b, p).conjugate()
        hopf = hopf_typical_ratio(la, lb)
        report.add(f"ratio {a} {b}", chi == hopf, {"chi*": chi, "hopf": hopf})
        closed = typical_hopf_closed_form(la, lb)
        value = hopf_ext(la, lb)
        report.add(f"closed form {a} {b}", value == closed, value)
    return report

