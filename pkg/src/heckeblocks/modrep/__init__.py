"""Module-theoretic layer: representations, Specht modules, projectivity and blocks."""

from .blocks import *  # noqa: F401,F403
from .modules import *  # noqa: F401,F403
from .specht import *  # noqa: F401,F403
from .tail import *  # noqa: F401,F403
