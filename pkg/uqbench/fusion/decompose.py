# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Decomposition of Weight Modules into Catalogue Indecomposables."""
from collections import Counter
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np

from ..exceptions import DecompositionError
from ..qmodules import direct_sum
from ..qmodules import hom_space
from ..qmodules import Intertwiner
from ..qmodules import is_isomorphic
from ..qmodules import is_typical
from ..qmodules import make_projective
from ..qmodules import make_simple
from ..qmodules import make_typical
from ..qmodules import ModuleLabel
from ..qmodules import WeightModule
from ..qmodules import linalg
from ..ribbon import qtrace
from ..scalars import CycScalar


logger = getLogger(__name__)

# atypical simple S_i (x) C^H_{lp}, keyed by (i, l)
Atom = Tuple[int, int]


@dataclass(frozen=True)
class FusionDecomp:
    """Certified decomposition of a module into catalogue indecomposables.

    Parameters
    ----------
    module: WeightModule
        The decomposed module M.

    models: list of WeightModule
        Catalogue summands, one entry per copy, in a fixed order.

    certificate: Intertwiner
        Invertible module map from M to the direct sum of `models`.

    """

    module: WeightModule
    models: Tuple[WeightModule, ...]
    certificate: Intertwiner = field(repr=False, compare=False)

    @property
    def summands(self) -> List[Tuple[ModuleLabel, int]]:
        """Labels with multiplicities, in order of first appearance."""
        counts = Counter(m.label for m in self.models)
        seen, out = set(), []
        for m in self.models:
            if m.label not in seen:
                seen.add(m.label)
                out.append((m.label, counts[m.label]))
        return out

    @property
    def offsets(self) -> List[int]:
        out, offset = [], 0
        for m in self.models:
            out.append(offset)
            offset += m.dim
        return out

    def conjugate(self, endomorphism: np.ndarray) -> np.ndarray:
        """Transport an endomorphism of M to the direct sum of the models."""
        c = self.certificate.matrix
        return linalg.matmul(c, linalg.matmul(endomorphism, linalg.inverse(c)))

    def blocks(self, endomorphism: np.ndarray) -> List[np.ndarray]:
        """Diagonal blocks of a transported endomorphism, one per model."""
        t = self.conjugate(endomorphism)
        return [
            np.array(t[o : o + m.dim, o : o + m.dim], dtype=object)
            for o, m in zip(self.offsets, self.models)
        ]


def composition_factors(m: WeightModule) -> Tuple[List[Fraction], Counter]:
    """Typical parameters and atypical simple factors read off the character.

    Factors are peeled off by highest weight: a top weight w gives V_{w-p+1}
    when that parameter is typical, and S_i (x) C^H_{lp} with w = i + lp
    otherwise.
    """
    p = m.p
    remaining = Counter(m.weights)
    typicals: List[Fraction] = []
    atoms: Counter = Counter()
    while remaining:
        w = max(remaining)
        alpha = w - (p - 1)
        if is_typical(alpha, p):
            typicals.append(alpha)
            weights = [alpha + p - 1 - 2 * k for k in range(p)]
        else:
            i = int(w) % p
            ell = (int(w) - i) // p
            atoms[(i, ell)] += 1
            weights = [w - 2 * k for k in range(i + 1)]
        for x in weights:
            if remaining[x] <= 0:
                raise DecompositionError(
                    f"the character of {m.label} is not a sum of catalogue characters"
                )
            remaining[x] -= 1
            if not remaining[x]:
                del remaining[x]
    return typicals, atoms


def _middle(x: Atom, p: int) -> List[Atom]:
    i, ell = x
    return [(p - 2 - i, ell - 1), (p - 2 - i, ell + 1)]


def _top_of_v(x: Atom, p: int) -> Atom:
    """Top of the atypical V whose socle is x."""
    j, m = x
    return p - 2 - j, m + 1


def _atypical_v(x: Atom, p: int) -> WeightModule:
    j, m = x
    return make_typical(p - 1 - j + m * p, p)


def _socle_top_counts(m: WeightModule, atoms: Counter) -> Tuple[Counter, Counter]:
    socle, top = Counter(), Counter()
    for (i, ell) in atoms:
        simple = make_simple(i, ell, m.p)
        socle[(i, ell)] = len(hom_space(simple, m))
        top[(i, ell)] = len(hom_space(m, simple))
    return socle, top


def _solve(
    atoms: Counter, socle: Counter, top: Counter, n_proj: Dict[Atom, int], p: int
):
    """Multiplicities of S, V and P summands for a guess of the P counts.

    Returns None when the guess is inconsistent with the composition,
    socle and top counts.
    """
    for x in n_proj:
        if any(y not in atoms for y in _middle(x, p)):
            return None
    n_simple, n_v = {}, {}
    for x in atoms:
        from_middle = sum(n_proj.get(y, 0) for y in _middle(x, p))
        n_simple[x] = from_middle - (atoms[x] - socle[x] - top[x])
        n_v[x] = socle[x] - n_simple[x] - n_proj.get(x, 0)
        if n_simple[x] < 0 or n_v[x] < 0:
            return None
    for x in atoms:
        j, ell = x
        below = (p - 2 - j, ell - 1)
        if top[x] != n_simple[x] + n_proj.get(x, 0) + n_v.get(below, 0):
            return None
        if n_v[x] and _top_of_v(x, p) not in atoms:
            return None
    for x in atoms:
        j, ell = x
        below = (p - 2 - j, ell - 1)
        from_middle = sum(n_proj.get(y, 0) for y in _middle(x, p))
        expected = (
            n_simple[x]
            + 2 * n_proj.get(x, 0)
            + n_v[x]
            + n_v.get(below, 0)
            + from_middle
        )
        if expected != atoms[x]:
            return None
    return n_simple, n_v


def decompose(m: WeightModule) -> FusionDecomp:
    """Decompose M into typical V_alpha, S_i (x) C^H_{lp}, atypical V_alpha and P_i.

    Candidate multiplicities come from the composition factors and the
    socle and top Hom dimensions against the atypical simples; the first
    candidate certified by an invertible intertwiner is returned.

    Parameters
    ----------
    m: WeightModule
        Module to decompose, e.g. a tensor product of catalogue modules.

    Returns
    ----------
    decomposition: FusionDecomp

    """
    p = m.p
    typicals, atoms = composition_factors(m)
    socle, top = _socle_top_counts(m, atoms)
    typical_models = [make_typical(a, p) for a in sorted(typicals, reverse=True)]
    candidates = [x for x in sorted(atoms) if min(socle[x], top[x]) > 0]
    ranges = [range(min(socle[x], top[x]) + 1) for x in candidates]
    n_tried = 0
    for counts in product(*ranges):
        n_proj = {x: n for x, n in zip(candidates, counts) if n}
        solved = _solve(atoms, socle, top, n_proj, p)
        if solved is None:
            continue
        n_simple, n_v = solved
        models = list(typical_models)
        for x in sorted(atoms):
            models.extend([make_simple(x[0], x[1], p)] * n_simple[x])
        for x in sorted(atoms):
            models.extend([_atypical_v(x, p)] * n_v[x])
        for x in sorted(n_proj):
            models.extend([make_projective(x[0], x[1], p)] * n_proj[x])
        n_tried += 1
        total, _ = direct_sum(models)
        certificate = is_isomorphic(m, total)
        if certificate is not None:
            logger.debug(f"decomposed {m.label} into {[str(x.label) for x in models]}")
            return FusionDecomp(module=m, models=tuple(models), certificate=certificate)
    raise DecompositionError(
        f"no catalogue direct sum certifies {m.label} ({n_tried} candidates tried)"
    )


def blockwise_qtrace(
    decomposition: FusionDecomp, endomorphism: np.ndarray
) -> CycScalar:
    """Quantum trace of an endomorphism of M, summed over the summand blocks."""
    acc = linalg.ZERO
    for model, block in zip(decomposition.models, decomposition.blocks(endomorphism)):
        acc = acc + qtrace(model, block)
    return acc
