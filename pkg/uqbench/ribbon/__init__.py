from uqbench.ribbon.braiding import balancing_check
from uqbench.ribbon.braiding import BraidData
from uqbench.ribbon.braiding import braiding
from uqbench.ribbon.braiding import monodromy
from uqbench.ribbon.braiding import r_coefficient
from uqbench.ribbon.braiding import r_matrix
from uqbench.ribbon.braiding import twist
from uqbench.ribbon.braiding import twist_closed_form
from uqbench.ribbon.braiding import twist_tilde
from uqbench.ribbon.trace import hopf_link
from uqbench.ribbon.trace import open_hopf
from uqbench.ribbon.trace import psi_closed_form
from uqbench.ribbon.trace import qdim
from uqbench.ribbon.trace import qdim_closed_form
from uqbench.ribbon.trace import qtrace
from uqbench.ribbon.trace import renormalized_dim
from uqbench.ribbon.trace import typical_hopf_check


__all__ = [
    "balancing_check",
    "BraidData",
    "braiding",
    "monodromy",
    "r_coefficient",
    "r_matrix",
    "twist",
    "twist_closed_form",
    "twist_tilde",
    "hopf_link",
    "open_hopf",
    "psi_closed_form",
    "qdim",
    "qdim_closed_form",
    "qtrace",
    "renormalized_dim",
    "typical_hopf_check",
]
