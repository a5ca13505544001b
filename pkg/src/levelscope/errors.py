"""Exception hierarchy shared by every module."""


class LevelscopeError(Exception):
    """Base class for all errors raised by levelscope."""


class FieldError(LevelscopeError, ValueError):
    """Bad modulus, mismatched moduli, or division by zero in F_p."""


class ShapeError(LevelscopeError, ValueError):
    """Vectors or matrices with incompatible dimensions."""


class ParseError(LevelscopeError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position})")


class ResourceError(LevelscopeError, MemoryError):
    """A configured size budget would be exceeded."""


class InvalidTransformError(LevelscopeError, ValueError):
    """Singular or ill-shaped change of coordinates."""


class InvalidCurveError(LevelscopeError, ValueError):
    """Weierstrass data that does not define a hyperelliptic curve."""


class InconsistencyError(LevelscopeError, RuntimeError):
    """An identity guaranteed by theory failed to hold; indicates a bug."""
