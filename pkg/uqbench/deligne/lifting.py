# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Lifting Criterion, Induction and the Algebra Object A_p."""
from fractions import Fraction
from logging import getLogger
from typing import List
from typing import Tuple

from sklearn.utils import check_scalar
from tqdm import tqdm

from ..exceptions import LiftViolationError
from ..exceptions import NonCatalogueError
from ..exceptions import NonScalarBlockError
from ..qmodules import make_projective
from ..qmodules import make_simple
from ..qmodules import make_typical
from ..qmodules import ModuleKind
from ..qmodules import linalg
from ..report import CheckReport
from ..ribbon import braiding
from ..ribbon import hopf_link
from ..ribbon import monodromy
from ..ribbon import twist
from ..scalars import CycScalar
from ..utils import check_p
from ..utils import rational_grid
from .fock import d_object
from .fock import DObject
from .fock import simple_current
from .labels import canonicalize
from .labels import es
from .labels import ev
from .labels import ExtLabel
from .labels import LabelType
from .labels import qp


logger = getLogger(__name__)


def _parity_total(obj: DObject) -> Fraction:
    """The quantity whose evenness decides the lifting of a catalogue object."""
    label, p, c = obj.wm.label, obj.p, obj.fock.c
    if label.kind in (ModuleKind.TYPICAL, ModuleKind.ATYPICAL):
        return label.params[0] + p - 1 + c
    if label.kind in (ModuleKind.SIMPLE, ModuleKind.PROJECTIVE):
        i, ell = label.params
        return i + p * ell + c
    if label.kind == ModuleKind.ONEDIM:
        return p * label.params[0] + c
    raise NonCatalogueError(f"`wm` must be a catalogue module, but {label} is given")


def lift_parity(obj: DObject) -> bool:
    """Closed-form lifting test: (alpha+p-1+c)/2 or (i+pl+c)/2 is an integer."""
    return (_parity_total(obj) / 2).denominator == 1


def lifts(obj: DObject) -> Tuple[bool, CycScalar]:
    """Decide whether a Deligne object induces to a local A_p-module.

    The monodromy with the simple current F_{lambda_p} (x) C^H_p is computed
    from the R-matrix on the quantum group factor and the Fock Hopf scalar.

    Parameters
    ----------
    obj: DObject
        Object whose quantum group factor is a catalogue module.

    Returns
    ----------
    lifted: bool
        Whether the monodromy is trivial.

    scalar: CycScalar
        The monodromy scalar.

    """
    if not obj.wm.label.is_catalogue:
        raise NonCatalogueError(
            f"`wm` must be a catalogue module, but {obj.wm.label} is given"
        )
    current = simple_current(1, obj.p)
    block = linalg.scalar_of(monodromy(current.wm, obj.wm))
    if block is None:
        raise NonScalarBlockError(
            f"monodromy of the simple current with {obj} is not scalar"
        )
    scalar = block * current.fock.hopf_scalar(obj.fock)
    return scalar == 1, scalar


def induce(obj: DObject) -> ExtLabel:
    """Canonical label of the induced module A_p (x) obj."""
    lifted, scalar = lifts(obj)
    if not lifted:
        raise LiftViolationError(f"{obj} does not lift: monodromy scalar is {scalar}")
    label, p, c = obj.wm.label, obj.p, obj.fock.c
    if label.kind in (ModuleKind.TYPICAL, ModuleKind.ATYPICAL):
        ext = ev(c, label.params[0], p)
    elif label.kind == ModuleKind.SIMPLE:
        n, ell = label.params
        # S_{p-1} (x) C^H_{lp} is the typical V_{lp}
        ext = ev(c, ell * p, p) if n == p - 1 else es(c, n, ell, p)
    elif label.kind == ModuleKind.ONEDIM:
        ext = es(c, 0, label.params[0], p)
    else:
        ext = qp(c, label.params[0], label.params[1], p)
    return canonicalize(ext)


def underlying(label: ExtLabel) -> DObject:
    """Deligne object whose induction is `label`."""
    if label.kind in (LabelType.EV, LabelType.QV):
        wm = make_typical(label.alpha, label.p)
    elif label.kind == LabelType.ES:
        wm = make_simple(label.i, label.ell, label.p)
    else:
        wm = make_projective(label.i, label.ell, label.p)
    return d_object(label.c, wm)


def nu_ell(label: ExtLabel) -> Tuple[Fraction, Fraction]:
    """Typical coordinates nu = 2 alpha / p and l = (c + alpha) / 2 of an EV label."""
    if label.kind != LabelType.EV:
        raise ValueError(f"`label` must be an EV label, but {label} is given")
    return 2 * label.alpha / label.p, (label.c + label.alpha) / 2


def atypical_ss(label: ExtLabel) -> Tuple[int, int]:
    """Atypical coordinates (s, s') = (i + 1, -c - p l) of an ES label."""
    if label.kind != LabelType.ES:
        raise ValueError(f"`label` must be an ES label, but {label} is given")
    s_prime = -label.c - label.p * label.ell
    if s_prime.denominator != 1:
        raise ValueError(
            f"charge of {label} must be an integer for (s, s') coordinates"
        )
    return label.i + 1, int(s_prime)


def hopf_ext(first: ExtLabel, second: ExtLabel) -> CycScalar:
    """Hopf link of two induced modules, read on their underlying objects.

    The value is unchanged by simple-current shifts for odd p. For even p a
    shift by J^k multiplies it by (-1)^k, the parity carried by the label's
    sector bit.
    """
    a, b = underlying(first), underlying(second)
    return a.fock.hopf_scalar(b.fock) * hopf_link(a.wm, b.wm)


def algebra_object_check(p: int, k_bound: int = 4) -> CheckReport:
    """Commutativity and twist triviality of A_p on the simple-current line.

    The twist rows fail for even p and odd powers, where A_p is a
    superalgebra.
    """
    check_p(p)
    check_scalar(k_bound, "k_bound", int, min_val=1)
    report = CheckReport(name=f"algebra_object[p={p}]")
    powers = range(-k_bound, k_bound + 1)
    for k in powers:
        for m in powers:
            x, y = simple_current(k, p), simple_current(m, p)
            block = braiding(x.wm, y.wm).matrix[0, 0]
            value = block * x.fock.braid_scalar(y.fock)
            report.add(f"braiding J^{k} J^{m}", value == 1, value)
    for k in powers:
        x = simple_current(k, p)
        value = twist(x.wm)[0, 0] * x.fock.twist_scalar()
        report.add(f"twist J^{k}", value == 1, value)
    return report


def lifting_grid(p: int, den_bound: int = 4, ell_bound: int = 2) -> List[DObject]:
    """Deligne objects over charges and weights with bounded denominators."""
    check_p(p)
    check_scalar(ell_bound, "ell_bound", int, min_val=0)
    charges = rational_grid(den_bound, -1, 1)
    objects = []
    for alpha in rational_grid(den_bound, 0, p):
        wm = make_typical(alpha, p)
        objects.extend(d_object(c, wm) for c in charges)
    for ell in range(-ell_bound, ell_bound + 1):
        for n in range(p):
            wm = make_simple(n, ell, p)
            objects.extend(d_object(c, wm) for c in charges)
        for i in range(p - 1):
            wm = make_projective(i, ell, p)
            objects.extend(d_object(c, wm) for c in charges)
    return objects


def lifting_criterion_check(
    p: int, den_bound: int = 4, ell_bound: int = 2, show_progress: bool = False
) -> CheckReport:
    """Compare the monodromy test with the parity formula over a grid."""
    report = CheckReport(name=f"lifting_criterion[p={p}]")
    objects = lifting_grid(p, den_bound=den_bound, ell_bound=ell_bound)
    logger.info(f"checking the lifting criterion on {len(objects)} objects at p={p}")
    for obj in tqdm(objects, desc="lift", disable=not show_progress):
        lifted, scalar = lifts(obj)
        report.add(str(obj), lifted == lift_parity(obj), scalar)
    return report
