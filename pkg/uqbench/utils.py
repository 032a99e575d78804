# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Useful Tools."""
from fractions import Fraction
import math
from typing import Iterable
from typing import List
from typing import Optional

from sklearn.utils import check_random_state
from sklearn.utils import check_scalar

from .types import Rational


def check_p(p: int) -> None:
    """Check the order parameter p of q = e^{pi i/p}."""
    check_scalar(p, "p", int, min_val=2)


def check_rational(x: Rational, name: str) -> Fraction:
    """Check that `x` is an exact rational and return it as a Fraction.

    Parameters
    ----------
    x: int or Fraction
        Value to check. Floats are rejected since every continuous
        parameter must be exact.

    name: str
        Name used in the error message.

    Returns
    ----------
    x: Fraction

    """
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(
            f"`{name}` must be an int or a Fraction, but {type(x)} is given"
        )
    return Fraction(x)


def check_index_range(i: int, name: str, min_val: int, max_val: int) -> None:
    """Check an integer index against a closed range."""
    check_scalar(i, name, int, min_val=min_val, max_val=max_val)


def rational_grid(den_bound: int, low: Rational, high: Rational) -> List[Fraction]:
    """All rationals in [low, high] with denominator at most `den_bound`, sorted."""
    check_scalar(den_bound, "den_bound", int, min_val=1)
    low, high = Fraction(low), Fraction(high)
    values = set()
    for den in range(1, den_bound + 1):
        start = math.ceil(low * den)
        stop = math.floor(high * den)
        for num in range(start, stop + 1):
            values.add(Fraction(num, den))
    return sorted(values)


def sample_rationals(
    candidates: Iterable[Fraction], size: int, random_state: Optional[int] = None
) -> List[Fraction]:
    """Draw `size` candidates without replacement with a fixed seed.

    The draw preserves the order of `candidates` so outputs are stable.
    """
    candidates = list(candidates)
    check_scalar(size, "size", int, min_val=0)
    if size >= len(candidates):
        return candidates
    random_ = check_random_state(random_state)
    chosen = sorted(random_.choice(len(candidates), size=size, replace=False))
    return [candidates[k] for k in chosen]


def is_integral(x: Rational) -> bool:
    return Fraction(x).denominator == 1
