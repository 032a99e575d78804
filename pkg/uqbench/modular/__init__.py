from uqbench.modular.atypical import antisymmetrization_check
from uqbench.modular.atypical import AtypIndex
from uqbench.modular.atypical import check_atypical_comparison
from uqbench.modular.atypical import hopf_atypical_ratio
from uqbench.modular.atypical import hopf_closed_float
from uqbench.modular.atypical import hopf_closed_form
from uqbench.modular.atypical import hopf_ratio_closed_form
from uqbench.modular.atypical import hopf_ratio_float
from uqbench.modular.atypical import lambda_set
from uqbench.modular.atypical import lambda_tilde_set
from uqbench.modular.atypical import reference_s
from uqbench.modular.atypical import s_chi_atypical_kernel
from uqbench.modular.atypical import s_chi_atypical_normalized
from uqbench.modular.atypical import s_hopf_atypical
from uqbench.modular.regularization import abel_closed_form
from uqbench.modular.regularization import abel_partial_sum
from uqbench.modular.regularization import abel_regularization_check
from uqbench.modular.regularization import default_nu_values
from uqbench.modular.regularization import n_abel_terms
from uqbench.modular.regularization import orthogonality_check
from uqbench.modular.regularization import orthogonality_value
from uqbench.modular.regularization import resolution_indices
from uqbench.modular.typical import check_typical_comparison
from uqbench.modular.typical import hopf_typical_ratio
from uqbench.modular.typical import s_chi_typical
from uqbench.modular.typical import s_chi_typical_ratio
from uqbench.modular.typical import s_chi_unit_typical
from uqbench.modular.typical import typical_hopf_closed_form
from uqbench.modular.typical import typical_indices
from uqbench.modular.typical import typical_pairs
from uqbench.modular.typical import TypicalIndex
from uqbench.modular.typical import unit_quotient
from uqbench.modular.verlinde import basis_indices
from uqbench.modular.verlinde import check_even_p
from uqbench.modular.verlinde import even_table_entry
from uqbench.modular.verlinde import homomorphism_check
from uqbench.modular.verlinde import quadrant_sign
from uqbench.modular.verlinde import s_matrix
from uqbench.modular.verlinde import s_matrix_float
from uqbench.modular.verlinde import s_matrix_json
from uqbench.modular.verlinde import verlinde_N


__all__ = [
    "antisymmetrization_check",
    "AtypIndex",
    "check_atypical_comparison",
    "hopf_atypical_ratio",
    "hopf_closed_float",
    "hopf_closed_form",
    "hopf_ratio_closed_form",
    "hopf_ratio_float",
    "lambda_set",
    "lambda_tilde_set",
    "reference_s",
    "s_chi_atypical_kernel",
    "s_chi_atypical_normalized",
    "s_hopf_atypical",
    "abel_closed_form",
    "abel_partial_sum",
    "abel_regularization_check",
    "default_nu_values",
    "n_abel_terms",
    "orthogonality_check",
    "orthogonality_value",
    "resolution_indices",
    "check_typical_comparison",
    "hopf_typical_ratio",
    "s_chi_typical",
    "s_chi_typical_ratio",
    "s_chi_unit_typical",
    "typical_hopf_closed_form",
    "typical_indices",
    "typical_pairs",
    "TypicalIndex",
    "unit_quotient",
    "basis_indices",
    "check_even_p",
    "even_table_entry",
    "homomorphism_check",
    "quadrant_sign",
    "s_matrix",
    "s_matrix_float",
    "s_matrix_json",
    "verlinde_N",
]
