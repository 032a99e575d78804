# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Exceptions raised by the workbench."""


class UqbenchError(Exception):
    """Base class of every domain failure raised by uqbench."""


class ConductorMismatchError(UqbenchError, ValueError):
    """A root of unity does not live in the requested cyclotomic field."""


class PoleError(UqbenchError, ZeroDivisionError):
    """A closed form was evaluated on its pole set (or a zero was inverted)."""


class ExtractionError(UqbenchError):
    """No dominant vector generated a projective module of the expected size."""


class SingularMatrixError(UqbenchError):
    """An exact matrix that must be invertible turned out singular."""


class DecompositionError(UqbenchError):
    """No catalogue direct sum could be certified isomorphic to a module."""


class NonScalarBlockError(UqbenchError):
    """A braiding block on a non-projective summand is not a scalar."""


class LiftViolationError(UqbenchError, ValueError):
    """A Deligne object with nontrivial monodromy was induced."""


class ParityError(UqbenchError, ValueError):
    """A Grothendieck class violates the lifting parity."""


class ClosedFormMismatchError(UqbenchError):
    """A first-principles value disagrees with its closed form."""


class EmptySeriesError(UqbenchError, ValueError):
    """A series is zero up to its cutoff and cannot be normalized."""


class NonCatalogueError(UqbenchError, ValueError):
    """A module is not one of the catalogue modules."""
