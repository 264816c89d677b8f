"""Exception types shared across the package."""


class InvalidFamilyParameter(ValueError):
    """A family parameter lies outside its admissible range."""


class NotUnitModulus(ValueError):
    """An associated-family factor must have |lambda| = 1."""


class PoleError(ArithmeticError):
    """Evaluation requested too close to a pole of the meromorphic data."""


class PoleOnPathError(ArithmeticError):
    """An integration path passes too close to a pole of the data."""


class QuadratureDivergence(ArithmeticError):
    """Interval doubling failed to stabilize the quadrature value."""


class SingularPointError(ArithmeticError):
    """A frame quantity was requested at a point of the singular set."""


class DivisionBySqrtZero(ArithmeticError):
    """A closed formula needs sqrt(d) > 0 but d = 0 was supplied."""


class DegenerateCriteria(ArithmeticError):
    """The singularity criteria are undefined (h, eta or h_z vanishes)."""


class UnmappedClass(ValueError):
    """The conjugation duality has no image for this singularity class."""


class NoBracketFound(ArithmeticError):
    """Root bracketing found no sign change on the scanned interval."""
