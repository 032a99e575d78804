# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""R-Matrix, Braiding, Monodromy and Twist."""
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..exceptions import SingularMatrixError
from ..qmodules import flip_matrix
from ..qmodules import tensor
from ..qmodules import WeightModule
from ..qmodules import linalg
from ..report import CheckReport
from ..scalars import CycScalar
from ..scalars import qbrace
from ..scalars import qfactorial
from ..scalars import qpow


@lru_cache(maxsize=None)
def r_coefficient(n: int, p: int) -> CycScalar:
    """Coefficient {1}^{2n}/{n}! q^{n(n-1)/2} of E^n (x) F^n in R."""
    phase = qpow(Fraction(n * (n - 1), 2), p)
    return qbrace(1, p) ** (2 * n) / qfactorial(n, p) * phase


def _check_pair(m: WeightModule, n: WeightModule) -> int:
    if m.p != n.p:
        raise ValueError(
            f"modules must share the same `p`, but {m.p} and {n.p} are given"
        )
    return m.p


def r_matrix(m: WeightModule, n: WeightModule) -> np.ndarray:
    """Matrix of R = q^{H (x) H/2} sum_n c_n E^n (x) F^n acting on M (x) N."""
    p = _check_pair(m, n)
    size = m.dim * n.dim
    total = linalg.zeros(size, size)
    e_power, f_power = linalg.identity(m.dim), linalg.identity(n.dim)
    for k in range(p):
        if k:
            e_power = linalg.matmul(m.E, e_power)
            f_power = linalg.matmul(n.F, f_power)
            if linalg.is_zero_matrix(e_power) or linalg.is_zero_matrix(f_power):
                break
        term = linalg.kron(e_power, f_power)
        total = linalg.add(total, linalg.scale(term, r_coefficient(k, p)))
    # q^{H (x) H/2} on the output weights
    phases = [qpow(wa * wb / 2, p) for wa in m.weights for wb in n.weights]
    for i in range(size):
        for j in range(size):
            if total[i, j]:
                total[i, j] = total[i, j] * phases[i]
    return total


@dataclass(frozen=True)
class BraidData:
    """Braiding c_{M,N}: M (x) N -> N (x) M.

    Parameters
    ----------
    source: tuple of WeightModule
        The ordered pair (M, N).

    matrix: np.ndarray
        Object matrix of the braiding.

    """

    source: tuple
    matrix: np.ndarray = field(repr=False, compare=False)

    def is_module_map(self) -> bool:
        m, n = self.source
        mn, nm = tensor(m, n), tensor(n, m)
        c = self.matrix
        return linalg.equal(linalg.matmul(c, mn.E), linalg.matmul(nm.E, c)) and (
            linalg.equal(linalg.matmul(c, mn.F), linalg.matmul(nm.F, c))
        )


def braiding(m: WeightModule, n: WeightModule) -> BraidData:
    """c_{M,N} = flip o R."""
    return BraidData(
        source=(m, n), matrix=linalg.matmul(flip_matrix(m, n), r_matrix(m, n))
    )


def monodromy(m: WeightModule, n: WeightModule) -> np.ndarray:
    """Double braiding c_{N,M} o c_{M,N}, an endomorphism of M (x) N."""
    return linalg.matmul(braiding(n, m).matrix, braiding(m, n).matrix)


def twist_tilde(m: WeightModule) -> np.ndarray:
    """Inverse twist K^{p-1} sum_n c_n S(F^n) q^{-H^2/2} E^n with S(F) = -K F."""
    p = m.p
    antipode_f = linalg.scale(linalg.matmul(m.K, m.F), -1)
    gauss = linalg.diag([qpow(-w * w / 2, p) for w in m.weights])
    total = linalg.zeros(m.dim, m.dim)
    s_power, e_power = linalg.identity(m.dim), linalg.identity(m.dim)
    for k in range(p):
        if k:
            s_power = linalg.matmul(s_power, antipode_f)
            e_power = linalg.matmul(m.E, e_power)
            if linalg.is_zero_matrix(e_power):
                break
        term = linalg.matmul(s_power, linalg.matmul(gauss, e_power))
        total = linalg.add(total, linalg.scale(term, r_coefficient(k, p)))
    return linalg.matmul(m.k_power(p - 1), total)


def twist(m: WeightModule) -> np.ndarray:
    """Twist theta_M, the inverse of `twist_tilde`."""
    try:
        return linalg.inverse(twist_tilde(m))
    except SingularMatrixError:
        raise SingularMatrixError(f"inverse twist of {m.label} is singular")


def twist_closed_form(highest_weight: Fraction, p: int) -> CycScalar:
    """Twist scalar q^{l^2/2 - (p-1) l} on a highest weight module of weight l."""
    lam = Fraction(highest_weight)
    return qpow(lam * lam / 2 - (p - 1) * lam, p)


def balancing_check(m: WeightModule, n: WeightModule) -> CheckReport:
    """Check theta_{M (x) N} = c_{N,M} c_{M,N} (theta_M (x) theta_N)."""
    report = CheckReport(name=f"balancing[{m.label},{n.label}]")
    lhs = twist(tensor(m, n))
    rhs = linalg.matmul(monodromy(m, n), linalg.kron(twist(m), twist(n)))
    report.add("balancing", linalg.equal(lhs, rhs))
    return report
