# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Floating Point Backend."""
import cmath
from enum import Enum
from enum import auto
from fractions import Fraction

import numpy as np

from ..types import Rational
from .cyclotomic import CycScalar


FLOAT_TOLERANCE = 1e-10


class Backend(Enum):
    """Scalar backend used by the drivers.

    EXACT computes in cyclotomic fields only, FLOAT in complex doubles only,
    BOTH computes the two and compares them.
    """

    EXACT = auto()
    FLOAT = auto()
    BOTH = auto()

    def __repr__(self) -> str:
        return str(self)

    @classmethod
    def from_name(cls, name: str) -> "Backend":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(
                "`backend` must be one of 'exact', 'float' or 'both', "
                f"but {name} is given"
            )


def rootexp_float(r: Rational) -> complex:
    """e^{pi i r} in complex doubles."""
    return cmath.exp(1j * cmath.pi * float(Fraction(r)))


def qpow_float(x: Rational, p: int) -> complex:
    return rootexp_float(Fraction(x) / p)


def qbrace_float(x: Rational, p: int) -> complex:
    return qpow_float(x, p) - qpow_float(-Fraction(x), p)


def qint_float(x: Rational, p: int) -> complex:
    return qbrace_float(x, p) / qbrace_float(1, p)


def float_embedding(z: CycScalar) -> complex:
    """Complex value of an exact scalar."""
    return complex(z)


def float_matrix(matrix: np.ndarray) -> np.ndarray:
    """Complex double copy of an object matrix of exact scalars."""
    out = np.zeros(matrix.shape, dtype=complex)
    for idx, value in np.ndenumerate(matrix):
        out[idx] = complex(value)
    return out


def agrees(z: CycScalar, w: complex, tol: float = FLOAT_TOLERANCE) -> bool:
    """Whether the exact scalar and the float value agree within `tol` absolute."""
    return abs(complex(z) - complex(w)) <= tol
