"""Mod-2 and twisted integral invariants of finite simplicial complexes, and
reducibility verdicts for Poincare duality spaces of dimension at most 4."""

from .complex import Character, SimplicialComplex, from_facets, from_json
from .errors import PDReduceError

__version__ = "0.1.0"

__all__ = ["Character", "SimplicialComplex", "from_facets", "from_json", "PDReduceError"]
