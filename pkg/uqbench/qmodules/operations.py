# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Tensor Products, Duals and Direct Sums."""
from typing import List
from typing import Sequence
from typing import Tuple

from . import linalg
from .base import Intertwiner
from .base import ModuleKind
from .base import ModuleLabel
from .base import WeightModule


def _check_same_p(modules: Sequence[WeightModule]) -> int:
    ps = {m.p for m in modules}
    if len(ps) != 1:
        raise ValueError(f"modules must share the same `p`, but {sorted(ps)} are given")
    return ps.pop()


def tensor(m: WeightModule, n: WeightModule) -> WeightModule:
    """Tensor product M (x) N with basis index a * dim(N) + b.

    The actions follow the coproduct
    Delta(E) = 1 (x) E + E (x) K, Delta(F) = K^{-1} (x) F + F (x) 1 and
    Delta(H) = H (x) 1 + 1 (x) H.
    """
    p = _check_same_p([m, n])
    id_m, id_n = linalg.identity(m.dim), linalg.identity(n.dim)
    e = linalg.add(linalg.kron(id_m, n.E), linalg.kron(m.E, n.K))
    f = linalg.add(linalg.kron(m.k_power(-1), n.F), linalg.kron(m.F, id_n))
    weights = tuple(wa + wb for wa in m.weights for wb in n.weights)
    # tensoring with an invertible one-dimensional module preserves simplicity
    simple = None
    if m.simple and n.simple and min(m.dim, n.dim) == 1:
        simple = True
    return WeightModule(
        p=p,
        weights=weights,
        E=e,
        F=f,
        label=ModuleLabel(ModuleKind.TENSOR, (m.label, n.label)),
        simple=simple,
    )


def dual(m: WeightModule) -> WeightModule:
    """Dual module with a f(v) = f(S(a) v), S(E) = -E K^{-1}, S(F) = -K F."""
    e = linalg.transpose(linalg.scale(linalg.matmul(m.E, m.k_power(-1)), -1))
    f = linalg.transpose(linalg.scale(linalg.matmul(m.K, m.F), -1))
    return WeightModule(
        p=m.p,
        weights=tuple(-w for w in m.weights),
        E=e,
        F=f,
        label=ModuleLabel(ModuleKind.DUAL, (m.label,)),
        simple=m.simple,
    )


def direct_sum(
    modules: Sequence[WeightModule],
) -> Tuple[WeightModule, List[Intertwiner]]:
    """Direct sum together with the block inclusions of the summands."""
    if not modules:
        raise ValueError("`modules` must not be empty")
    p = _check_same_p(modules)
    total = WeightModule(
        p=p,
        weights=tuple(w for m in modules for w in m.weights),
        E=linalg.block_diag([m.E for m in modules]),
        F=linalg.block_diag([m.F for m in modules]),
        label=ModuleLabel(ModuleKind.SUM, tuple(m.label for m in modules)),
        simple=modules[0].simple if len(modules) == 1 else False,
    )
    inclusions = []
    offset = 0
    for m in modules:
        matrix = linalg.zeros(total.dim, m.dim)
        for k in range(m.dim):
            matrix[offset + k, k] = linalg.ONE
        inclusions.append(Intertwiner(source=m, target=total, matrix=matrix))
        offset += m.dim
    return total, inclusions


def flip_matrix(m: WeightModule, n: WeightModule):
    """Matrix of the flip M (x) N -> N (x) M, (a, b) -> (b, a)."""
    out = linalg.zeros(m.dim * n.dim, m.dim * n.dim)
    for a in range(m.dim):
        for b in range(n.dim):
            out[b * m.dim + a, a * n.dim + b] = linalg.ONE
    return out
