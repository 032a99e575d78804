# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Atypical Modular Data over Lambda_p."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from typing import List

from ..deligne import atypical_ss
from ..deligne import es
from ..deligne import ExtLabel
from ..deligne import hopf_ext
from ..deligne import LabelType
from ..exceptions import ClosedFormMismatchError
from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qbrace
from ..scalars import qbrace_float
from ..scalars import qint
from ..scalars import qint_float
from ..scalars import qpow
from ..scalars import qpow_float
from ..scalars import RootExp
from ..utils import check_index_range
from ..utils import check_p


logger = getLogger(__name__)


@dataclass(frozen=True, order=True)
class AtypIndex:
    """Index (s, s') of an atypical module sigma^{s'}(W_s).

    Parameters
    ----------
    s: int
        In 1..p-1.

    s_prime: int
        In 0..p-1 for Lambda_p; in -p..-1 for the shifted copy used when p is
        even.

    p: int
        Order parameter.

    """

    s: int
    s_prime: int
    p: int

    def __post_init__(self) -> None:
        check_p(self.p)
        check_index_range(self.s, "s", 1, self.p - 1)
        low = -self.p if self.p % 2 == 0 else 0
        check_index_range(self.s_prime, "s_prime", low, self.p - 1)
        if (self.s + self.s_prime + 1) % 2:
            raise ValueError(
                f"`s + s' + 1` must be even, but {self.s + self.s_prime + 1} is given"
            )

    @property
    def tilde(self) -> bool:
        """Whether the index lies in the shifted copy of Lambda_p."""
        return self.s_prime < 0

    def label(self) -> ExtLabel:
        """The induced module ES(-s', s-1, 0)."""
        return es(-self.s_prime, self.s - 1, 0, self.p)

    @classmethod
    def from_label(cls, label: ExtLabel) -> "AtypIndex":
        """Index of an ES label through (s, s') = (i + 1, -c - p l)."""
        s, s_prime = atypical_ss(label)
        return cls(s=s, s_prime=s_prime, p=label.p)

    def __str__(self) -> str:
        return f"({self.s},{self.s_prime})"


def lambda_set(p: int) -> List[AtypIndex]:
    """Lambda_p = {(s, s') : 0 < s <= p-1, 0 <= s' <= p-1, s + s' + 1 even}."""
    check_p(p)
    return [
        AtypIndex(s=s, s_prime=t, p=p)
        for s in range(1, p)
        for t in range(p)
        if (s + t + 1) % 2 == 0
    ]


def lambda_tilde_set(p: int) -> List[AtypIndex]:
    """{(s, s' - p) : (s, s') in Lambda_p}, for even p."""
    check_p(p)
    if p % 2:
        raise ValueError(f"`p` must be even, but {p} is given")
    return [AtypIndex(s=x.s, s_prime=x.s_prime - p, p=p) for x in lambda_set(p)]


def s_chi_atypical_normalized(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """Normalized character ratio q^{n's'} [ns] / [n]."""
    return qpow(b.s_prime * a.s_prime, p) * qint(b.s * a.s, p) / qint(b.s, p)


def s_chi_atypical_kernel(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """Unnormalized kernel -(1/p) q^{n's'} {ns}, without the u-dependent prefactor."""
    return qpow(b.s_prime * a.s_prime, p) * qbrace(b.s * a.s, p) * Fraction(-1, p)


def reference_s(s: int, s_prime: int, n: int, n_prime: int, p: int) -> CycScalar:
    """Entry -(1/p) e^{-2 pi i (sn - s'n')/(2p)} of the S-matrix over S_p."""
    phase = RootExp(Fraction(-(s * n - s_prime * n_prime), p))
    return phase.to_cyc() * Fraction(-1, p)


def antisymmetrization_check(p: int) -> CheckReport:
    """Kernel against S_{(s,s'),(n,n')} - S_{(s,s'),(-n,n')} over Lambda_p.

    The antisymmetrized reference entry equals the kernel up to the global
    sign -1, which cancels in every normalized ratio.
    """
    report = CheckReport(name=f"antisymmetrization[p={p}]")
    for a in lambda_set(p):
        for b in lambda_set(p):
            difference = reference_s(
                a.s, a.s_prime, b.s, b.s_prime, p
            ) - reference_s(a.s, a.s_prime, -b.s, b.s_prime, p)
            kernel = s_chi_atypical_kernel(a, b, p)
            report.add(f"{a} {b}", difference == -kernel, difference)
    return report


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def hopf_closed_form(first: ExtLabel, second: ExtLabel) -> CycScalar:
    """Closed form of the Hopf link of two ES labels.

    (-1)^{(i+1)(l+1) + (j+1)(k+1) + p(kl+k+l)} q^{-c1 c2} [(i+1)(j+1)] for
    F (x) S_i (x) C^H_{pk} against F (x) S_j (x) C^H_{pl}.
    """
    if first.kind != LabelType.ES or second.kind != LabelType.ES:
        raise ValueError(
            f"labels must be ES labels, but {first} and {second} are given"
        )
    p, i, k, j, ell = first.p, first.i, first.ell, second.i, second.ell
    sign = _sign((i + 1) * (ell + 1) + (j + 1) * (k + 1) + p * (k * ell + k + ell))
    return qpow(-first.c * second.c, p) * qint((i + 1) * (j + 1), p) * sign


@lru_cache(maxsize=None)
def _hopf_labels(first: ExtLabel, second: ExtLabel) -> CycScalar:
    return hopf_ext(first, second)


def s_hopf_atypical(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """Hopf link of the induced modules of two atypical indices.

    Computed from the R-matrix and the Fock Hopf scalar, then compared with
    `hopf_closed_form`.

    Raises
    ----------
    ClosedFormMismatchError
        When the two computations disagree.

    """
    first, second = a.label(), b.label()
    value = _hopf_labels(first, second)
    closed = hopf_closed_form(first, second)
    if value != closed:
        raise ClosedFormMismatchError(
            f"Hopf link {a} {b} at p={p}: computed {value}, closed form {closed}"
        )
    return value


def hopf_atypical_ratio(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """Normalized Hopf ratio of e(s, s') = (-1)^{s-1}[ES(-s', s-1, 0)]."""
    unit = AtypIndex(s=1, s_prime=0, p=p)
    return s_hopf_atypical(a, b, p) / s_hopf_atypical(unit, b, p) * _sign(a.s - 1)


def hopf_ratio_closed_form(a: AtypIndex, b: AtypIndex, p: int) -> CycScalar:
    """q^{-n's'} {ns} / {n}."""
    return qpow(-b.s_prime * a.s_prime, p) * qbrace(b.s * a.s, p) / qbrace(b.s, p)


def hopf_closed_float(a: AtypIndex, b: AtypIndex, p: int) -> complex:
    """Closed form (-1)^{s+n} q^{-s'n'} [sn] of the Hopf link in complex doubles."""
    return (
        _sign(a.s + b.s)
        * qpow_float(-a.s_prime * b.s_prime, p)
        * qint_float(a.s * b.s, p)
    )


def hopf_ratio_float(a: AtypIndex, b: AtypIndex, p: int) -> complex:
    return (
        qpow_float(-b.s_prime * a.s_prime, p)
        * qbrace_float(b.s * a.s, p)
        / qbrace_float(b.s, p)
    )


def check_atypical_comparison(p: int) -> CheckReport:
    """Conjugated character ratio against the Hopf ratio over Lambda_p x Lambda_p."""
    check_p(p)
    if p % 2 == 0:
        raise ValueError(f"`p` must be odd, but {p} is given")
    report = CheckReport(name=f"atypical_comparison[p={p}]")
    indices = lambda_set(p)
    logger.info(f"comparing {len(indices) ** 2} atypical entries at p={p}")
    for a in indices:
        for b in indices:
            chi = s_chi_atypical_normalized(a, b, p).conjugate()
            hopf = hopf_atypical_ratio(a, b, p)
            report.add(
                f"ratio {a} {b}",
                chi == hopf and hopf == hopf_ratio_closed_form(a, b, p),
                {"chi*": chi, "hopf": hopf},
            )
    return report
