"""Graceful total colourings, graph homomorphisms between coloured graphs,
and the Topcode-matrix / number-string encodings built on them."""

from .coloring import TotalColoring, WType, search, verify
from .errors import GraceHomError
from .graph import Graph

__all__ = ["Graph", "TotalColoring", "WType", "GraceHomError", "search", "verify"]
__version__ = "0.1.0"
