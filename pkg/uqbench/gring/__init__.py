from uqbench.gring.basis import basis
from uqbench.gring.basis import basis_even0
from uqbench.gring.basis import from_lambda
from uqbench.gring.basis import GBasisElem
from uqbench.gring.basis import lambda_sign
from uqbench.gring.basis import normal_key
from uqbench.gring.basis import reduce
from uqbench.gring.basis import to_lambda
from uqbench.gring.ring import GElem
from uqbench.gring.ring import lambda_bijection_check
from uqbench.gring.ring import multiply
from uqbench.gring.ring import product_indices
from uqbench.gring.ring import reduce_compatibility_check
from uqbench.gring.ring import ring_axioms_check
from uqbench.gring.ring import ring_basis
from uqbench.gring.ring import structure_constants
from uqbench.gring.ring import structure_constants_json


__all__ = [
    "basis",
    "basis_even0",
    "from_lambda",
    "GBasisElem",
    "lambda_sign",
    "normal_key",
    "reduce",
    "to_lambda",
    "GElem",
    "lambda_bijection_check",
    "multiply",
    "product_indices",
    "reduce_compatibility_check",
    "ring_axioms_check",
    "ring_basis",
    "structure_constants",
    "structure_constants_json",
]
