from uqbench.qmodules.base import Intertwiner
from uqbench.qmodules.base import ModuleKind
from uqbench.qmodules.base import ModuleLabel
from uqbench.qmodules.base import WeightModule
from uqbench.qmodules.catalogue import from_label
from uqbench.qmodules.catalogue import is_typical
from uqbench.qmodules.catalogue import make_onedim
from uqbench.qmodules.catalogue import make_projective
from uqbench.qmodules.catalogue import make_simple
from uqbench.qmodules.catalogue import make_typical
from uqbench.qmodules.catalogue import projective_highest_weight
from uqbench.qmodules.catalogue import unit
from uqbench.qmodules.homspace import hom_space
from uqbench.qmodules.homspace import is_isomorphic
from uqbench.qmodules.homspace import quotient
from uqbench.qmodules.homspace import Submodule
from uqbench.qmodules.homspace import submodule_generated
from uqbench.qmodules.operations import direct_sum
from uqbench.qmodules.operations import dual
from uqbench.qmodules.operations import flip_matrix
from uqbench.qmodules.operations import tensor
from uqbench.qmodules.structure import atypical_ses_check
from uqbench.qmodules.structure import loewy_data
from uqbench.qmodules.structure import projective_loewy_check
from uqbench.qmodules.structure import projective_ses_check


__all__ = [
    "Intertwiner",
    "ModuleKind",
    "ModuleLabel",
    "WeightModule",
    "from_label",
    "is_typical",
    "make_onedim",
    "make_projective",
    "make_simple",
    "make_typical",
    "projective_highest_weight",
    "unit",
    "hom_space",
    "is_isomorphic",
    "quotient",
    "Submodule",
    "submodule_generated",
    "direct_sum",
    "dual",
    "flip_matrix",
    "tensor",
    "atypical_ses_check",
    "loewy_data",
    "projective_loewy_check",
    "projective_ses_check",
]
