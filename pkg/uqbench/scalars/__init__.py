from uqbench.scalars.cyclotomic import common_conductor
from uqbench.scalars.cyclotomic import CycScalar
from uqbench.scalars.cyclotomic import cyclotomic_polynomial
from uqbench.scalars.cyclotomic import embed_rootexp
from uqbench.scalars.cyclotomic import qbrace
from uqbench.scalars.cyclotomic import qfactorial
from uqbench.scalars.cyclotomic import qint
from uqbench.scalars.cyclotomic import qpow
from uqbench.scalars.cyclotomic import RootExp
from uqbench.scalars.floating import agrees
from uqbench.scalars.floating import Backend
from uqbench.scalars.floating import float_embedding
from uqbench.scalars.floating import float_matrix
from uqbench.scalars.floating import qbrace_float
from uqbench.scalars.floating import qint_float
from uqbench.scalars.floating import qpow_float
from uqbench.scalars.floating import rootexp_float


__all__ = [
    "common_conductor",
    "CycScalar",
    "cyclotomic_polynomial",
    "embed_rootexp",
    "qbrace",
    "qfactorial",
    "qint",
    "qpow",
    "RootExp",
    "agrees",
    "Backend",
    "float_embedding",
    "float_matrix",
    "qbrace_float",
    "qint_float",
    "qpow_float",
    "rootexp_float",
]
