# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Equivalence of Characters up to gamma q^a x^b."""
from fractions import Fraction
from logging import getLogger
from typing import Optional
from typing import Tuple

from ..exceptions import EmptySeriesError
from ..scalars import CycScalar
from .products import QCharacter
from .series import min_bound
from .series import PSeries


logger = getLogger(__name__)


def _normalized(series: PSeries) -> Tuple[PSeries, Fraction, int, Fraction]:
    (qexp, xexp), coeff = series.leading()
    coeff = Fraction(coeff)
    return series.shift(-qexp, -xexp).scale(1 / coeff), qexp, xexp, coeff


def equiv_check(
    first: QCharacter, second: QCharacter
) -> Tuple[bool, CycScalar, Fraction, Fraction]:
    """Decide whether first = gamma q^a x^b second to the common cutoff.

    Both bodies are shifted so that their lexicographically minimal terms
    sit at (0, 0) with coefficient 1, and compared up to the smaller of the
    shifted cutoffs.

    Returns
    ----------
    equal: bool
        Whether the normalized bodies agree.

    gamma: CycScalar
        Ratio of the leading constants, phases included.

    a, b: Fraction
        Exponents of q and x relating the two characters.

    Raises
    ----------
    EmptySeriesError
        If either series vanishes to its cutoff.

    """
    if first.is_zero() or second.is_zero():
        raise EmptySeriesError("equivalence needs two nonzero series")
    left, qa, xa, ca = _normalized(first.series)
    right, qb, xb, cb = _normalized(second.series)
    x_bound = min_bound(left.x_bound, right.x_bound)
    cutoff = min(left.cutoff, right.cutoff)
    left = PSeries(cutoff, left.denom, left.terms, x_bound=x_bound)
    right = PSeries(cutoff, right.denom, right.terms, x_bound=x_bound)
    equal = left == right
    gamma = (first.ledger.phase / second.ledger.phase).to_cyc() * (ca / cb)
    a = first.ledger.qshift + qa - second.ledger.qshift - qb
    b = first.ledger.xshift + xa - second.ledger.xshift - xb
    logger.debug(f"equivalence to q^{cutoff}: {equal} with a={a}, b={b}")
    return equal, gamma, a, b


def series_dump(character: QCharacter, name: Optional[str] = None) -> str:
    """Text dump: a ledger header, then lines "q^{a} x^{b} : c" sorted by (a, b)."""
    ledger = character.ledger
    lines = []
    if name is not None:
        lines.append(f"# {name}")
    lines.append(
        f"# phase={ledger.phase}, qshift={ledger.qshift}, xshift={ledger.xshift}"
    )
    lines.append(f"# cutoff={character.series.cutoff}")
    for (qexp, xexp), coeff in character.series.items():
        lines.append(f"q^{{{qexp}}} x^{{{xexp}}} : {coeff}")
    return "\n".join(lines) + "\n"
