# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Products and Structure Constants of the Semisimplified Grothendieck Ring."""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from logging import getLogger
from typing import Dict
from typing import Iterator
from typing import List
from typing import Tuple
from typing import Union

import numpy as np

from ..fusion import composition_factors
from ..qmodules import make_simple
from ..qmodules import tensor
from ..report import CheckReport
from ..types import Rational
from ..utils import check_p
from .basis import _element
from .basis import basis
from .basis import basis_even0
from .basis import from_lambda
from .basis import GBasisElem
from .basis import GKey
from .basis import lambda_sign
from .basis import normal_key
from .basis import to_lambda


logger = getLogger(__name__)

PRODUCT_METHODS = ("formula", "character")


@dataclass(frozen=True)
class GElem:
    """Integer combination of basis classes.

    Parameters
    ----------
    p: int
        Order parameter of q = e^{pi i/p}.

    even0: bool, default=False
        Whether the element lives in the even-part ring.

    terms: tuple of ((int, int), int)
        Nonzero coefficients keyed by normalized class, sorted by key.

    """

    p: int
    even0: bool = False
    terms: Tuple[Tuple[GKey, int], ...] = ()

    @classmethod
    def from_counts(
        cls, counts: Dict[GKey, int], p: int, even0: bool = False
    ) -> "GElem":
        terms = tuple(sorted((k, n) for k, n in counts.items() if n))
        return cls(p=p, even0=even0, terms=terms)

    @classmethod
    def zero(cls, p: int, even0: bool = False) -> "GElem":
        return cls(p=p, even0=even0)

    @classmethod
    def from_basis(cls, elem: GBasisElem) -> "GElem":
        return cls(p=elem.p, even0=elem.even0, terms=((elem.key, 1),))

    @classmethod
    def from_class(
        cls, c: Rational, i: int, ell: int, p: int, even0: bool = False
    ) -> "GElem":
        """Reduced class of F (x) S_i (x) C^H_{pl} with charge c."""
        signed = normal_key(c, i, ell, p, even0=even0)
        if signed is None:
            return cls.zero(p, even0)
        sign, key = signed
        return cls(p=p, even0=even0, terms=((key, sign),))

    @classmethod
    def unit(cls, p: int, even0: bool = False) -> "GElem":
        return cls.from_class(0, 0, 0, p, even0=even0)

    @property
    def counts(self) -> Dict[GKey, int]:
        return dict(self.terms)

    def coefficient(self, elem: GBasisElem) -> int:
        return self.counts.get(elem.key, 0)

    def items(self) -> Iterator[Tuple[GBasisElem, int]]:
        for key, n in self.terms:
            yield _element(key, self.p, self.even0), n

    def is_zero(self) -> bool:
        return not self.terms

    def is_positive(self) -> bool:
        """All coefficients are non-negative."""
        return all(n >= 0 for _, n in self.terms)

    def _check_compatible(self, other: "GElem") -> None:
        if (self.p, self.even0) != (other.p, other.even0):
            raise ValueError(
                "elements must live in the same ring, but (p, even0) = "
                f"{(self.p, self.even0)} and {(other.p, other.even0)} are given"
            )

    def __add__(self, other: "GElem") -> "GElem":
        self._check_compatible(other)
        counts = Counter(self.counts)
        counts.update(other.counts)
        return GElem.from_counts(counts, self.p, self.even0)

    def __neg__(self) -> "GElem":
        terms = tuple((k, -n) for k, n in self.terms)
        return GElem(p=self.p, even0=self.even0, terms=terms)

    def __sub__(self, other: "GElem") -> "GElem":
        return self + (-other)

    def __mul__(self, other: Union["GElem", int]) -> "GElem":
        if isinstance(other, GElem):
            return multiply(self, other)
        if isinstance(other, bool) or not isinstance(other, int):
            return NotImplemented
        counts = {k: n * other for k, n in self.terms}
        return GElem.from_counts(counts, self.p, self.even0)

    def __rmul__(self, other: int) -> "GElem":
        return self * other

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{n}*{elem}" for elem, n in self.items())


def product_indices(i: int, j: int, p: int) -> List[int]:
    """Simple indices l with S_l a summand of S_i (x) S_j modulo projectives.

    l runs from |i-j| in steps of 2 up to i+j when i+j < p, and up to
    2p-4-i-j otherwise.
    """
    top = i + j if i + j < p else 2 * p - 4 - i - j
    return list(range(abs(i - j), top + 1, 2))


@lru_cache(maxsize=None)
def _key_product(
    first: GKey, second: GKey, p: int, even0: bool, method: str
) -> Tuple[Tuple[GKey, int], ...]:
    (c1, i), (c2, j) = first, second
    counts: Counter = Counter()
    if method == "formula":
        classes = [(l_, 0) for l_ in product_indices(i, j, p)]
    else:
        module = tensor(make_simple(i, 0, p), make_simple(j, 0, p))
        _, atoms = composition_factors(module)
        classes = list(atoms.elements())
    for k, ell in classes:
        signed = normal_key(c1 + c2, k, ell, p, even0=even0)
        if signed is not None:
            counts[signed[1]] += signed[0]
    return tuple(sorted((k, n) for k, n in counts.items() if n))


def multiply(a: GElem, b: GElem, method: str = "formula") -> GElem:
    """Product in G^ss(C^0) (or the even-part ring), bilinear over the terms.

    Parameters
    ----------
    a, b: GElem
        Factors from the same ring.

    method: str, default="formula"
        "formula" sums the simple summands of S_i (x) S_j given by
        `product_indices`; "character" peels the composition factors off the
        character of the tensor product and drops the negligible ones.

    Returns
    ----------
    ab: GElem

    """
    if method not in PRODUCT_METHODS:
        raise ValueError(
            f"`method` must be one of {PRODUCT_METHODS}, but {method} is given"
        )
    a._check_compatible(b)
    counts: Counter = Counter()
    for (k1, n1), (k2, n2) in product(a.terms, b.terms):
        for key, n in _key_product(k1, k2, a.p, a.even0, method):
            counts[key] += n1 * n2 * n
    return GElem.from_counts(counts, a.p, a.even0)


def ring_basis(p: int, even0: bool = False) -> List[GBasisElem]:
    return basis_even0(p) if even0 else basis(p)


def structure_constants(p: int, even0: bool = False) -> np.ndarray:
    """Tensor N with basis[a] * basis[b] = sum_c N[a, b, c] basis[c].

    Parameters
    ----------
    p: int
        Order parameter.

    even0: bool, default=False
        Use the even-part ring and `basis_even0` (even p only).

    Returns
    ----------
    constants: array of shape (n_basis, n_basis, n_basis)
        Integer structure constants in the order of the basis.

    """
    check_p(p)
    elems = ring_basis(p, even0)
    index = {e.key: k for k, e in enumerate(elems)}
    constants = np.zeros((len(elems),) * 3, dtype=int)
    for a, x in enumerate(elems):
        for b, y in enumerate(elems):
            for key, n in multiply(GElem.from_basis(x), GElem.from_basis(y)).terms:
                constants[a, b, index[key]] = n
    return constants


def _index_name(elem: GBasisElem) -> str:
    if elem.even0 or elem.p % 2:
        return str(to_lambda(elem))
    return str(elem)


def structure_constants_json(p: int, even0: bool = False) -> Dict[str, object]:
    """Nonzero structure constants keyed by (s, s') triples where available."""
    elems = ring_basis(p, even0)
    names = [_index_name(e) for e in elems]
    constants = structure_constants(p, even0)
    entries = {}
    for a, b, c in zip(*np.nonzero(constants)):
        entries[f"{names[a]}*{names[b]}->{names[c]}"] = int(constants[a, b, c])
    return {
        "p": p,
        "even0": even0,
        "basis": [{"index": names[k], "class": str(e)} for k, e in enumerate(elems)],
        "entries": entries,
    }


def _raw_classes(p: int) -> List[Tuple[int, int, int]]:
    """Unreduced classes (c, i, l) with shifted charges and l in -1..2."""
    out = []
    for ell in range(-1, 3):
        for i in range(p):
            for c in range(-p, p + 1):
                if (c + i + p * ell) % 2 == 0:
                    out.append((c, i, ell))
    return out


def ring_axioms_check(p: int, even0: bool = False) -> CheckReport:
    """Ring axioms on the basis classes, comparing both product routes.

    Positivity of the structure constants is checked for odd p and for the
    even-part ring, the cases where the basis is a Z_+-basis.
    """
    check_p(p)
    report = CheckReport(name=f"gring_axioms[p={p},even0={even0}]")
    elems = [GElem.from_basis(e) for e in ring_basis(p, even0)]
    one = GElem.unit(p, even0)
    logger.info(f"checking ring axioms on {len(elems)} basis elements at p={p}")
    for x in elems:
        report.add(f"unit * {x}", one * x == x and x * one == x)
    for x, y in product(elems, repeat=2):
        xy = x * y
        by_character = multiply(x, y, method="character")
        report.add(f"commute {x}, {y}", xy == y * x, str(xy))
        report.add(f"product routes {x}, {y}", xy == by_character, str(by_character))
        if even0 or p % 2:
            report.add(f"positive {x}, {y}", xy.is_positive(), str(xy))
    for x, y, z in product(elems, repeat=3):
        report.add(f"associate {x}, {y}, {z}", (x * y) * z == x * (y * z))
    return report


def reduce_compatibility_check(p: int, even0: bool = False) -> CheckReport:
    """Multiplying unreduced classes and reducing after agrees with reducing first."""
    check_p(p)
    report = CheckReport(name=f"gring_reduce[p={p},even0={even0}]")
    raw = _raw_classes(p)
    for (c1, i, l1), (c2, j, l2) in product(raw, repeat=2):
        after: Counter = Counter()
        for k in product_indices(i, j, p):
            signed = normal_key(c1 + c2, k, l1 + l2, p, even0=even0)
            if signed is not None:
                after[signed[1]] += signed[0]
        before = multiply(
            GElem.from_class(c1, i, l1, p, even0), GElem.from_class(c2, j, l2, p, even0)
        )
        after = GElem.from_counts(after, p, even0)
        report.add(f"[{c1},{i},{l1}] * [{c2},{j},{l2}]", before == after, str(after))
    return report


def lambda_bijection_check(p: int, even0: bool = False) -> CheckReport:
    """Round trip between basis classes and (s, s') indices, with the class signs."""
    check_p(p)
    report = CheckReport(name=f"gring_lambda[p={p},even0={even0}]")
    elems = ring_basis(p, even0)
    images = [to_lambda(e) for e in elems]
    report.add("injective", len(set(images)) == len(elems), len(elems))
    for elem, (s, s_prime) in zip(elems, images):
        back = from_lambda(s, s_prime, p, even0)
        report.add(f"round trip {elem}", back == elem, (s, s_prime))
        signed = GElem.from_class(-s_prime, s - 1, 0, p, even0)
        sign = 1 if even0 else lambda_sign(s)
        report.add(
            f"signed class ({s},{s_prime})",
            signed == sign * GElem.from_basis(elem),
            str(signed),
        )
    return report
