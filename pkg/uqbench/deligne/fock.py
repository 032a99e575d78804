# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Heisenberg Fock Lines and Deligne Products."""
from dataclasses import dataclass
from fractions import Fraction

from ..qmodules import make_onedim
from ..qmodules import tensor
from ..qmodules import WeightModule
from ..scalars import CycScalar
from ..scalars import qpow
from ..types import Rational
from ..utils import check_p
from ..utils import check_rational


@dataclass(frozen=True)
class FockLine:
    """One-dimensional Fock line F_gamma of the Heisenberg category.

    The imaginary weight gamma is stored through the rational charge
    c = 2 lambda_p gamma, where lambda_p^2 = -p/2. Every categorical scalar
    of Fock lines is then a root of unity in the cyclotomic field of q.

    Parameters
    ----------
    c: Fraction
        Charge of the line.

    p: int
        Order of q = e^{pi i/p}.

    """

    c: Fraction
    p: int

    def __post_init__(self) -> None:
        check_p(self.p)
        object.__setattr__(self, "c", check_rational(self.c, "c"))

    def _check_other(self, other: "FockLine") -> None:
        if other.p != self.p:
            raise ValueError(
                "Fock lines must share the same `p`, "
                f"but {self.p} and {other.p} are given"
            )

    def __add__(self, other: "FockLine") -> "FockLine":
        self._check_other(other)
        return FockLine(c=self.c + other.c, p=self.p)

    def braid_scalar(self, other: "FockLine") -> CycScalar:
        """e^{pi i gamma_1 gamma_2} = q^{-c_1 c_2 / 2}."""
        self._check_other(other)
        return qpow(-self.c * other.c / 2, self.p)

    def twist_scalar(self) -> CycScalar:
        """e^{pi i gamma^2} = q^{-c^2 / 2}."""
        return qpow(-self.c * self.c / 2, self.p)

    def hopf_scalar(self, other: "FockLine") -> CycScalar:
        """e^{2 pi i gamma_1 gamma_2} = q^{-c_1 c_2}."""
        self._check_other(other)
        return qpow(-self.c * other.c, self.p)

    def __str__(self) -> str:
        return f"F(c={self.c})"


@dataclass(frozen=True)
class DObject:
    """Deligne product F_gamma (x) W of a Fock line and a weight module.

    Parameters
    ----------
    fock: FockLine
        Heisenberg factor.

    wm: WeightModule
        Quantum group factor.

    """

    fock: FockLine
    wm: WeightModule

    def __post_init__(self) -> None:
        if self.fock.p != self.wm.p:
            raise ValueError(
                "factors must share the same `p`, "
                f"but {self.fock.p} and {self.wm.p} are given"
            )

    @property
    def p(self) -> int:
        return self.wm.p

    def tensor(self, other: "DObject") -> "DObject":
        return DObject(fock=self.fock + other.fock, wm=tensor(self.wm, other.wm))

    def __str__(self) -> str:
        return f"{self.fock} [x] {self.wm.label}"


def d_object(c: Rational, wm: WeightModule) -> DObject:
    """Shorthand for DObject(FockLine(c, p), wm)."""
    return DObject(fock=FockLine(c=Fraction(c), p=wm.p), wm=wm)


def simple_current(k: int, p: int) -> DObject:
    """k-th power (F_{lambda_p} (x) C^H_p)^k = F(c=-kp) (x) C^H_{kp}."""
    return d_object(-k * p, make_onedim(k, p))
