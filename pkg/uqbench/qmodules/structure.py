# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Short Exact Sequences and Loewy Data of Catalogue Modules."""
from typing import Dict
from typing import Tuple

from ..report import CheckReport
from ..utils import check_index_range
from ..utils import check_p
from . import linalg
from .base import WeightModule
from .catalogue import make_projective
from .catalogue import make_simple
from .catalogue import make_typical
from .catalogue import projective_highest_weight
from .homspace import hom_space
from .homspace import is_isomorphic
from .homspace import quotient
from .homspace import submodule_generated
from .operations import direct_sum


def atypical_ses_check(k: int, ell: int, p: int) -> CheckReport:
    """Check 0 -> S_{p-1-k} (x) C_{lp} -> V_{k+lp} -> S_{k-1} (x) C_{(l+1)p} -> 0.

    The submodule is generated by v_k, and the extension does not split.
    """
    check_p(p)
    check_index_range(k, "k", 1, p - 1)
    report = CheckReport(name=f"atypical_ses[k={k},l={ell},p={p}]")
    v = make_typical(k + ell * p, p)
    report.add("E v_k = 0", not any(bool(x) for x in v.E[:, k]))
    generator = linalg.vector([linalg.ZERO] * v.dim)
    generator[k] = linalg.ONE
    sub = submodule_generated(v, [generator])
    socle = make_simple(p - 1 - k, ell, p)
    top = make_simple(k - 1, ell + 1, p)
    report.add("dim sub = p-k", sub.module.dim == p - k, sub.module.dim)
    report.add("sub is S_{p-1-k}", is_isomorphic(sub.module, socle) is not None)
    quo, projection = quotient(v, sub)
    report.add("quotient is S_{k-1}", is_isomorphic(quo, top) is not None)
    report.add("projection is a module map", projection.is_module_map())
    report.add(
        "dim Hom(S_{p-1-k}, V) = 1",
        len(hom_space(socle, v)) == 1,
        len(hom_space(socle, v)),
    )
    split, _ = direct_sum([socle, top])
    report.add("extension does not split", is_isomorphic(v, split) is None)
    return report


def projective_ses_check(i: int, ell: int, p: int) -> CheckReport:
    """Check 0 -> V_{p-1-i+lp} -> P_i (x) C_{lp} -> V_{1+i-p+lp} -> 0 and End(P) = 2."""
    check_p(p)
    check_index_range(i, "i", 0, p - 2)
    report = CheckReport(name=f"projective_ses[i={i},l={ell},p={p}]")
    proj = make_projective(i, ell, p)
    report.add("dim P = 2p", proj.dim == 2 * p, proj.dim)
    expected_hw = projective_highest_weight(i, ell, p)
    report.add(
        "highest weight", proj.highest_weight() == expected_hw, proj.highest_weight()
    )
    report.add("dim End(P) = 2", len(hom_space(proj, proj)) == 2)
    sub_v = make_typical(p - 1 - i + ell * p, p)
    quo_v = make_typical(1 + i - p + ell * p, p)
    maps = hom_space(sub_v, proj)
    injective = [m for m in maps if linalg.rank(m.matrix) == sub_v.dim]
    report.add("V_{p-1-i+lp} embeds", bool(injective), len(maps))
    if injective:
        image = submodule_generated(
            proj, [injective[0].matrix[:, k] for k in range(sub_v.dim)]
        )
        quo, _ = quotient(proj, image)
        report.add("quotient is V_{1+i-p+lp}", is_isomorphic(quo, quo_v) is not None)
    report.add("relations", proj.check_relations().passed)
    return report


def loewy_data(module: WeightModule) -> Dict[str, Dict[Tuple[int, int], int]]:
    """Socle and top multiplicities of the atypical simples S_j (x) C_{lp}.

    Only simples whose weights occur in the module are tested.
    """
    p = module.p
    socle, top = {}, {}
    weights = set(module.weights)
    for j in range(p - 1):
        for hw in sorted(weights):
            if hw.denominator != 1 or (int(hw) - j) % p:
                continue
            ell = (int(hw) - j) // p
            simple = make_simple(j, ell, p)
            n_in = len(hom_space(simple, module))
            n_out = len(hom_space(module, simple))
            if n_in:
                socle[(j, ell)] = n_in
            if n_out:
                top[(j, ell)] = n_out
    return {"socle": socle, "top": top}


def projective_loewy_check(i: int, ell: int, p: int) -> CheckReport:
    """Socle and top of P_i (x) C_{lp} are both the simple S_i (x) C_{lp}."""
    report = CheckReport(name=f"projective_loewy[i={i},l={ell},p={p}]")
    data = loewy_data(make_projective(i, ell, p))
    head = (i, ell)
    report.add("socle", data["socle"] == {head: 1}, data["socle"])
    report.add("top", data["top"] == {head: 1}, data["top"])
    return report
