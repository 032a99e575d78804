from uqbench.deligne.fock import d_object
from uqbench.deligne.fock import DObject
from uqbench.deligne.fock import FockLine
from uqbench.deligne.fock import simple_current
from uqbench.deligne.labels import canonicalize
from uqbench.deligne.labels import es
from uqbench.deligne.labels import ev
from uqbench.deligne.labels import ExtLabel
from uqbench.deligne.labels import LabelType
from uqbench.deligne.labels import qp
from uqbench.deligne.lifting import algebra_object_check
from uqbench.deligne.lifting import atypical_ss
from uqbench.deligne.lifting import hopf_ext
from uqbench.deligne.lifting import induce
from uqbench.deligne.lifting import lift_parity
from uqbench.deligne.lifting import lifting_criterion_check
from uqbench.deligne.lifting import lifting_grid
from uqbench.deligne.lifting import lifts
from uqbench.deligne.lifting import nu_ell
from uqbench.deligne.lifting import underlying


__all__ = [
    "d_object",
    "DObject",
    "FockLine",
    "simple_current",
    "canonicalize",
    "es",
    "ev",
    "ExtLabel",
    "LabelType",
    "qp",
    "algebra_object_check",
    "atypical_ss",
    "hopf_ext",
    "induce",
    "lift_parity",
    "lifting_criterion_check",
    "lifting_grid",
    "lifts",
    "nu_ell",
    "underlying",
]
