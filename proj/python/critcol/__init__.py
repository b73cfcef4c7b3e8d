"""Critical vertices and edges under chromatic number.

Thin wrapper over the C++ core. Vertices are 0-indexed, edges are (u, v)
tuples, formula variables are 1-indexed as in the file format.
"""

from ._critcol import *  # noqa: F401,F403
from ._critcol import (  # noqa: F401
    ArgumentError,
    CritcolError,
    FormulaError,
    GenerationError,
    ParseError,
    ResourceError,
)

__version__ = "0.1.0"
