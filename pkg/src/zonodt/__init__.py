"""Exact computations for break divisors, zonotopal algebras and quiver DT invariants."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import CapExceeded, ValidationError
from .graph import Multigraph, TuttePoly, genus, spanning_tree_count, tutte
from .quiver import SymmetricQuiver, covering_graph

__all__ = [
    "CapExceeded",
    "Multigraph",
    "SymmetricQuiver",
    "TuttePoly",
    "ValidationError",
    "__version__",
    "covering_graph",
    "genus",
    "spanning_tree_count",
    "tutte",
]
