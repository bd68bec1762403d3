"""Exact computations in type-A Iwahori-Hecke algebras at a root of unity.

Block labels by e-cores and e-weights, zero counts of Poincaré polynomials,
relative-trace projectivity tests, Specht modules over finite fields and Q,
and the vertices of blocks.
"""

from .exactfield import *  # noqa: F401,F403
from .combinat import *  # noqa: F401,F403
from .symgrp import *  # noqa: F401,F403
from .poincare import *  # noqa: F401,F403
from .hecke import *  # noqa: F401,F403
from .modrep import *  # noqa: F401,F403

__version__ = "0.1.0"
