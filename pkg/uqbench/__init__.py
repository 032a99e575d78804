from uqbench import cli
from uqbench import deligne
from uqbench import exceptions
from uqbench import fusion
from uqbench import gring
from uqbench import modular
from uqbench import qmodules
from uqbench import qseries
from uqbench import report
from uqbench import ribbon
from uqbench import scalars
from uqbench import types
from uqbench import utils
from uqbench.version import __version__  # noqa


__all__ = [
    "cli",
    "deligne",
    "exceptions",
    "fusion",
    "gring",
    "modular",
    "qmodules",
    "qseries",
    "report",
    "ribbon",
    "scalars",
    "types",
    "utils",
    "version",
]
