"""Exception types. All derive from ValueError so callers may catch broadly."""


class PolyExtremaError(ValueError):
    pass


class NonFiniteCoordinate(PolyExtremaError):
    pass


class TooFewVertices(PolyExtremaError):
    pass


class ZeroPerimeter(PolyExtremaError):
    pass


class BadIndexSet(PolyExtremaError):
    pass


class BadN(PolyExtremaError):
    pass


class BadSplit(PolyExtremaError):
    pass


class BadEpsilon(PolyExtremaError):
    pass


class BadRadius(PolyExtremaError):
    pass


class InfeasibleStart(PolyExtremaError):
    pass


class TooLarge(PolyExtremaError):
    pass


class OutOfRange(PolyExtremaError):
    pass


class BadRange(PolyExtremaError):
    pass


class PolygonParseError(PolyExtremaError):
    """Raised for malformed polygon JSON; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
