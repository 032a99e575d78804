from uqbench.fusion.decompose import blockwise_qtrace
from uqbench.fusion.decompose import composition_factors
from uqbench.fusion.decompose import decompose
from uqbench.fusion.decompose import FusionDecomp
from uqbench.fusion.ext import braiding_scalars
from uqbench.fusion.ext import ExtFusion
from uqbench.fusion.ext import fuse_ext
from uqbench.fusion.ext import fuse_sums
from uqbench.fusion.ext import fusion_json
from uqbench.fusion.ext import SummandBraiding
from uqbench.fusion.ext import tensor_ext
from uqbench.fusion.ext import weight_space_traces
from uqbench.fusion.tables import check_intro_table
from uqbench.fusion.tables import classify_scalar
from uqbench.fusion.tables import intro_table
from uqbench.fusion.tables import ScalarMatch
from uqbench.fusion.tables import TableEntry


__all__ = [
    "blockwise_qtrace",
    "composition_factors",
    "decompose",
    "FusionDecomp",
    "braiding_scalars",
    "ExtFusion",
    "fuse_ext",
    "fuse_sums",
    "fusion_json",
    "SummandBraiding",
    "tensor_ext",
    "weight_space_traces",
    "check_intro_table",
    "classify_scalar",
    "intro_table",
    "ScalarMatch",
    "TableEntry",
]
