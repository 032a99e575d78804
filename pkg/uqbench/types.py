# Copyright (c) uqbench developers. All rights reserved.
# Licensed under the Apache 2.0 License.

"""Types."""
from fractions import Fraction
from typing import Dict
from typing import List
from typing import Tuple
from typing import Union

import numpy as np


# scalars
Rational = Union[int, Fraction]

# module data: square numpy object arrays of CycScalar entries
Matrix = np.ndarray

# character of a weight module: weight -> multiplicity
Character = Dict[Fraction, int]

# qseries term key: (q-exponent, x-exponent)
TermKey = Tuple[Fraction, int]

# report rows
ReportRow = Dict[str, Union[str, bool, float, List]]
