from uqbench.qseries.characters import char_bp_product
from uqbench.qseries.characters import char_kw
from uqbench.qseries.characters import char_sigma_w
from uqbench.qseries.characters import final_kw_product
from uqbench.qseries.characters import kw_form
from uqbench.qseries.characters import qh_character_check
from uqbench.qseries.characters import RootDatum
from uqbench.qseries.characters import sigma_relations_check
from uqbench.qseries.equivalence import equiv_check
from uqbench.qseries.equivalence import series_dump
from uqbench.qseries.products import eta_factor
from uqbench.qseries.products import eta_form
from uqbench.qseries.products import Ledger
from uqbench.qseries.products import ProductForm
from uqbench.qseries.products import QCharacter
from uqbench.qseries.products import theta01
from uqbench.qseries.products import theta01_form
from uqbench.qseries.products import theta11
from uqbench.qseries.products import theta11_form
from uqbench.qseries.series import euler_product
from uqbench.qseries.series import factor_series
from uqbench.qseries.series import PSeries
from uqbench.qseries.series import series_denominator


__all__ = [
    "char_bp_product",
    "char_kw",
    "char_sigma_w",
    "final_kw_product",
    "kw_form",
    "qh_character_check",
    "RootDatum",
    "sigma_relations_check",
    "equiv_check",
    "series_dump",
    "eta_factor",
    "eta_form",
    "Ledger",
    "ProductForm",
    "QCharacter",
    "theta01",
    "theta01_form",
    "theta11",
    "theta11_form",
    "euler_product",
    "factor_series",
    "PSeries",
    "series_denominator",
]
