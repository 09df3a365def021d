"""Exact rank decompositions of the determinant tensor.

Thin re-export of the compiled extension: field and scalar arithmetic,
decomposition generators, expansion and verification, matrix evaluation,
polynomial views and the text format.
"""

from detdecomp._core import *  # noqa: F401,F403
from detdecomp._core import __version__  # noqa: F401
