# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Basis and Reduction of the Semisimplified Grothendieck Ring."""
from dataclasses import dataclass
from typing import List
from typing import Optional
from typing import Tuple

from sklearn.utils import check_scalar

from ..deligne import es
from ..deligne import ExtLabel
from ..exceptions import ParityError
from ..types import Rational
from ..utils import check_index_range
from ..utils import check_p
from ..utils import check_rational


# normalized class: (charge c + p l reduced mod 2p, simple index i)
GKey = Tuple[int, int]


@dataclass(frozen=True, order=True)
class GBasisElem:
    """Class of F_gamma (x) S_i (x) C^H_{pl} with gamma = c / (2 lambda_p).

    Parameters
    ----------
    c: int
        Charge of the Fock factor.

    i: int
        Index of the atypical simple, in 0..p-2.

    ell: int
        Shift of the one-dimensional factor, 0 or 1.

    p: int
        Order parameter of q = e^{pi i/p}.

    even0: bool, default=False
        Whether the class lives in the ring of the even part of B_p (even p),
        where only even powers of the simple current are identified.

    """

    c: int
    i: int
    ell: int
    p: int
    even0: bool = False

    def __post_init__(self) -> None:
        check_p(self.p)
        check_scalar(self.c, "c", int)
        check_index_range(self.i, "i", 0, self.p - 2)
        check_index_range(self.ell, "ell", 0, 1)
        if (self.c + self.i + self.p * self.ell) % 2:
            raise ParityError(
                "`c + i + p l` must be even, "
                f"but {self.c + self.i + self.p * self.ell} is given"
            )
        if self.even0 and self.p % 2:
            raise ParityError(
                f"`p` must be even for the even-part ring, but {self.p} is given"
            )

    @property
    def key(self) -> GKey:
        return (self.c + self.p * self.ell) % (2 * self.p), self.i

    def ext_label(self) -> ExtLabel:
        """Induced label ES(c, i, l) representing the class."""
        return es(self.c, self.i, self.ell, self.p)

    def __str__(self) -> str:
        return f"[{self.c},{self.i},{self.p * self.ell}]"


def _element(key: GKey, p: int, even0: bool) -> GBasisElem:
    """Basis element in the presentation of the minimal generating sets."""
    c, i = key
    if even0:
        return GBasisElem(c=c - 2 * p if c >= p else c, i=i, ell=0, p=p, even0=True)
    if c >= p:
        return GBasisElem(c=c - p, i=i, ell=1, p=p)
    return GBasisElem(c=c, i=i, ell=0, p=p)


def basis(p: int) -> List[GBasisElem]:
    """Minimal generating set of G^ss(C^0), which is a Z_+-basis for odd p.

    For odd p the elements are [2n, 2m, 0] with n in 0..(p-1)/2 and
    [2n+1, 2m, p] with n in 0..(p-3)/2, m in 0..(p-3)/2 in both families.
    For even p they are [2n, 2m, 0] and [2n+1, 2m+1, 0] with n, m ranging
    up to (p-2)/2, the odd family stopping at m = (p-4)/2.
    """
    check_p(p)
    out = []
    if p % 2:
        half = (p - 1) // 2
        for n in range(half + 1):
            out.extend(GBasisElem(c=2 * n, i=2 * m, ell=0, p=p) for m in range(half))
        for n in range(half):
            out.extend(
                GBasisElem(c=2 * n + 1, i=2 * m, ell=1, p=p) for m in range(half)
            )
        return out
    half = p // 2
    for n in range(half):
        out.extend(GBasisElem(c=2 * n, i=2 * m, ell=0, p=p) for m in range(half))
    for n in range(half):
        out.extend(
            GBasisElem(c=2 * n + 1, i=2 * m + 1, ell=0, p=p) for m in range(half - 1)
        )
    return out


def basis_even0(p: int) -> List[GBasisElem]:
    """Z_+-basis of the ring of local modules over the even part of B_p.

    Each element [c, i, 0] of `basis(p)` is joined by [c - p, p-2-i, 0],
    the image of its single simple-current shift.
    """
    check_p(p)
    if p % 2:
        raise ParityError(f"`p` must be even, but {p} is given")
    out = []
    for elem in basis(p):
        out.append(GBasisElem(c=elem.c, i=elem.i, ell=0, p=p, even0=True))
        out.append(GBasisElem(c=elem.c - p, i=p - 2 - elem.i, ell=0, p=p, even0=True))
    return out


def normal_key(
    c: Rational, i: int, ell: int, p: int, even0: bool = False
) -> Optional[Tuple[int, GKey]]:
    """Signed key of the class [c, i, pl], or None for a negligible class.

    Parameters
    ----------
    c: int or Fraction
        Fock charge.

    i: int
        Simple index in 0..p-1; i = p-1 is the typical V_{lp}, which is zero.

    ell: int
        Shift of the one-dimensional factor (any integer).

    even0: bool, default=False
        Reduce in the even-part ring, where [c, i, pl] = [c-p, i, p(l+1)]
        does not hold.

    Returns
    ----------
    signed_key: (int, (int, int)) or None
        Sign and normalized key.

    """
    check_p(p)
    c = check_rational(c, "c")
    check_index_range(i, "i", 0, p - 1)
    check_scalar(ell, "ell", int)
    total = c + i + p * ell
    if total.denominator != 1 or total.numerator % 2:
        raise ParityError(
            f"`c + i + p l` must be an even integer, but {total} is given"
        )
    if i == p - 1:
        return None
    c = int(c)
    sign = 1
    if even0:
        if p % 2:
            raise ParityError(
                f"`p` must be even for the even-part ring, but {p} is given"
            )
        # [c, i, p(l+1)] = -[c, p-2-i, pl] and l is 2-periodic at fixed charge
        if ell % 2:
            sign, i = -1, p - 2 - i
        return sign, (c % (2 * p), i)
    c = (c + p * ell) % (2 * p)
    flip = i % 2 if p % 2 else c >= p
    if flip:
        sign, c, i = -1, (c + p) % (2 * p), p - 2 - i
    return sign, (c, i)


def reduce(
    c: Rational, i: int, ell: int, p: int, even0: bool = False
) -> Optional[Tuple[int, GBasisElem]]:
    """Reduce [c, i, pl] to a signed canonical basis element.

    The relations used are [c, p-1-i, pl] = -[c, i-1, p(l+1)], the
    simple-current identification [c, i, pl] = [c-p, i, p(l+1)] (even
    powers only when `even0`), and the vanishing of the classes of V_alpha
    and P_i.

    Returns
    ----------
    signed_element: (int, GBasisElem) or None
        None when the class is zero.

    """
    signed = normal_key(c, i, ell, p, even0=even0)
    if signed is None:
        return None
    sign, key = signed
    return sign, _element(key, p, even0)


def to_lambda(elem: GBasisElem) -> Tuple[int, int]:
    """Index (s, s') of a basis element.

    For odd p the image is Lambda_p, through the signed classes
    e(s, s') = (-1)^{s-1} [-s', s-1, 0]. For the even-part ring the image is
    Lambda_p united with its shift by -p in the second coordinate.
    """
    p = elem.p
    c, i = elem.key
    if elem.even0:
        s_prime = -c % (2 * p)
        return i + 1, s_prime - 2 * p if s_prime >= p else s_prime
    if p % 2 == 0:
        raise ValueError(
            f"`p` must be odd outside the even-part ring, but {p} is given"
        )
    s_prime = -c % (2 * p)
    if s_prime <= p - 1:
        return i + 1, s_prime
    return p - 1 - i, s_prime - p


def from_lambda(s: int, s_prime: int, p: int, even0: bool = False) -> GBasisElem:
    """Inverse of `to_lambda`."""
    check_p(p)
    check_index_range(s, "s", 1, p - 1)
    check_index_range(s_prime, "s_prime", -p if even0 else 0, p - 1)
    if (s + s_prime + 1) % 2:
        raise ParityError(f"`s + s' + 1` must be even, but {s + s_prime + 1} is given")
    if not even0 and p % 2 == 0:
        raise ValueError(
            f"`p` must be odd outside the even-part ring, but {p} is given"
        )
    return reduce(-s_prime, s - 1, 0, p, even0=even0)[1]


def lambda_sign(s: int) -> int:
    """Sign of [-s', s-1, 0] against the basis element e(s, s')."""
    return -1 if (s - 1) % 2 else 1

