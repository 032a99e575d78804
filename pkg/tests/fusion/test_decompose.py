from fractions import Fraction

import pytest

from uqbench.exceptions import DecompositionError
from uqbench.fusion import blockwise_qtrace
from uqbench.fusion import composition_factors
from uqbench.fusion import decompose
from uqbench.qmodules import linalg
from uqbench.qmodules import make_simple
from uqbench.qmodules import make_typical
from uqbench.qmodules import ModuleKind
from uqbench.qmodules import tensor
from uqbench.qmodules import WeightModule
from uqbench.ribbon import qdim


def test_composition_factors():
    p = 3
    m = tensor(make_simple(1, 0, p), make_typical(Fraction(1, 3), p))
    typicals, atoms = composition_factors(m)
    assert sorted(typicals) == [Fraction(-2, 3), Fraction(4, 3)]
    assert not atoms


def test_composition_factors_of_invalid_character():
    m = WeightModule(p=3, weights=(1,), E=linalg.zeros(1, 1), F=linalg.zeros(1, 1))
    with pytest.raises(DecompositionError):
        composition_factors(m)


def test_decompose_into_projective():
    # S_1 (x) S_1 = P_0 at p = 2
    m = tensor(make_simple(1, 0, 2), make_simple(1, 0, 2))
    decomposition = decompose(m)
    assert [x.label.kind for x in decomposition.models] == [ModuleKind.PROJECTIVE]
    assert decomposition.certificate.is_invertible()
    assert decomposition.certificate.is_module_map()


def test_decompose_semisimple():
    p = 3
    m = tensor(make_simple(1, 0, p), make_simple(1, 0, p))
    decomposition = decompose(m)
    kinds = sorted(x.label.kind.name for x in decomposition.models)
    assert kinds == ["SIMPLE", "TYPICAL"]
    assert sum(mult for _, mult in decomposition.summands) == 2


def test_blockwise_qtrace(p):
    m = tensor(make_simple(1, 0, p), make_simple(1, 1, p))
    decomposition = decompose(m)
    assert blockwise_qtrace(decomposition, linalg.identity(m.dim)) == qdim(m)
