"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures without
a lookup table: 1 for bad input, 2 for "not a Z/2 Poincare duality
complex", 3 for resource bounds.
"""


class PDReduceError(Exception):
    exit_code = 1


class MalformedInput(PDReduceError):
    exit_code = 1


class UnknownKey(PDReduceError, KeyError):
    exit_code = 1

    def __str__(self):
        return Exception.__str__(self)


class DegreeOutOfRange(PDReduceError, ValueError):
    pass


class IndexOutOfRange(PDReduceError, ValueError):
    pass


class InvalidCharacter(PDReduceError, ValueError):
    pass


class NotInvertible(PDReduceError, ValueError):
    pass


class WrongDimension(PDReduceError, ValueError):
    pass


class NotPDComplex(PDReduceError):
    """Base for every failure meaning the input is not a Z/2-PD complex."""

    exit_code = 2


class NotConnected(NotPDComplex):
    pass


class NoFundamentalClass(NotPDComplex):
    pass


class NoOrientationCharacter(NotPDComplex):
    pass


class AmbiguousCharacter(NotPDComplex):
    def __init__(self, message, characters=()):
        super().__init__(message)
        self.characters = tuple(characters)


class DualityFails(NotPDComplex):
    def __init__(self, degree, rank_deficit):
        super().__init__(
            f"cap product with the fundamental class is not invertible in degree "
            f"{degree} (rank deficit {rank_deficit})"
        )
        self.degree = degree
        self.rank_deficit = rank_deficit


class ResourceBoundExceeded(PDReduceError):
    exit_code = 3


class SizeBoundExceeded(ResourceBoundExceeded):
    pass


class EnumerationBoundExceeded(ResourceBoundExceeded):
    pass
