# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Labels of Induced Modules."""
from dataclasses import dataclass
from dataclasses import replace
from enum import Enum
from enum import auto
from fractions import Fraction
import math
from typing import Optional

from ..exceptions import LiftViolationError
from ..types import Rational
from ..utils import check_p
from ..utils import check_rational


class LabelType(Enum):
    """Kind of an induced module.

    EV: induced from a typical V_alpha; QV: from an atypical V_alpha;
    ES: from S_i (x) C^H_{lp}; QP: from P_i (x) C^H_{lp}.
    """

    EV = auto()
    QV = auto()
    ES = auto()
    QP = auto()

    def __repr__(self) -> str:
        return str(self)


@dataclass(frozen=True)
class ExtLabel:
    """Label of a module in Rep^0(A_p).

    Parameters
    ----------
    kind: LabelType
        Kind of the label.

    c: Fraction
        Fock charge.

    p: int
        Order of q.

    alpha: Fraction, default=None
        Weight parameter of EV and QV labels.

    i: int, default=None
        Simple or projective index of ES and QP labels.

    ell: int, default=None
        Shift index of ES and QP labels.

    sector: int, default=0
        Orbit bit under the even subgroup of simple-current shifts; only
        tracked for even p.

    """

    kind: LabelType
    c: Fraction
    p: int
    alpha: Optional[Fraction] = None
    i: Optional[int] = None
    ell: Optional[int] = None
    sector: int = 0

    def __post_init__(self) -> None:
        check_p(self.p)
        object.__setattr__(self, "c", check_rational(self.c, "c"))
        if self.kind in (LabelType.EV, LabelType.QV):
            if self.alpha is None:
                raise ValueError(f"`alpha` must be given for {self.kind.name} labels")
            alpha = check_rational(self.alpha, "alpha")
            object.__setattr__(self, "alpha", alpha)
            typical = alpha.denominator != 1 or alpha.numerator % self.p == 0
            if typical != (self.kind == LabelType.EV):
                raise ValueError(
                    f"`alpha` of a {self.kind.name} label must be "
                    f"{'typical' if self.kind == LabelType.EV else 'atypical'}, "
                    f"but {alpha} is given"
                )
            total = alpha + self.p - 1 + self.c
        else:
            if self.i is None or self.ell is None:
                raise ValueError(
                    f"`i` and `ell` must be given for {self.kind.name} labels"
                )
            if not 0 <= self.i <= self.p - 2:
                raise ValueError(
                    f"`i` must be in [0, {self.p - 2}], but {self.i} is given"
                )
            total = self.i + self.p * self.ell + self.c
        if (total / 2).denominator != 1:
            raise LiftViolationError(
                f"{self} violates the lifting parity: {total}/2 is not an integer"
            )

    def shift(self, k: int) -> "ExtLabel":
        """Relabel by the k-th simple-current shift (isomorphic module)."""
        c = self.c - k * self.p
        sector = (self.sector + k) % 2 if self.p % 2 == 0 else 0
        if self.kind in (LabelType.EV, LabelType.QV):
            return replace(self, c=c, alpha=self.alpha + k * self.p, sector=sector)
        return replace(self, c=c, ell=self.ell + k, sector=sector)

    def without_sector(self) -> "ExtLabel":
        return replace(self, sector=0)

    def __str__(self) -> str:
        if self.kind in (LabelType.EV, LabelType.QV):
            body = f"c={self.c},a={self.alpha}"
        else:
            body = f"c={self.c},i={self.i},l={self.ell}"
        if self.sector:
            body += f",s={self.sector}"
        return f"{self.kind.name}({body})"


def ev(c: Rational, alpha: Rational, p: int) -> ExtLabel:
    alpha = Fraction(alpha)
    typical = alpha.denominator != 1 or alpha.numerator % p == 0
    kind = LabelType.EV if typical else LabelType.QV
    return ExtLabel(kind=kind, c=Fraction(c), p=p, alpha=alpha)


def es(c: Rational, i: int, ell: int, p: int) -> ExtLabel:
    return ExtLabel(kind=LabelType.ES, c=Fraction(c), p=p, i=i, ell=ell)


def qp(c: Rational, i: int, ell: int, p: int) -> ExtLabel:
    return ExtLabel(kind=LabelType.QP, c=Fraction(c), p=p, i=i, ell=ell)


def canonicalize(label: ExtLabel) -> ExtLabel:
    """Canonical representative of the simple-current orbit of a label.

    ES and QP labels are moved to l = 0, EV and QV labels to alpha in (0, p].
    For even p the sector bit records the parity of the shift applied.
    """
    if label.kind in (LabelType.EV, LabelType.QV):
        k = math.floor(1 - label.alpha / label.p)
    else:
        k = -label.ell
    return label.shift(k) if k else label
