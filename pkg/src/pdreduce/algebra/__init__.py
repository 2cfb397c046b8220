from .f2 import F2Matrix, TaggedEchelon
from .integer import IntMatrix, SmithForm, invariant_factors, smith_normal_form

__all__ = [
    "F2Matrix",
    "TaggedEchelon",
    "IntMatrix",
    "SmithForm",
    "invariant_factors",
    "smith_normal_form",
]
