# /project/cubing/errors.py

class CubingError(Exception):
    """Base class for every error raised by the toolkit."""


class ParseError(CubingError):
    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DuplicateCorner(ParseError):
    pass


class CubeShapeError(CubingError):
    pass


class UnknownVertex(CubingError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex '{vertex}'")


class DisconnectedPair(CubingError):
    pass


class DisconnectedSet(CubingError):
    pass


class BudgetExceeded(CubingError):
    pass


class RegionError(CubingError):
    """An implicit map was evaluated outside its declared region."""


class SeparationFailure(CubingError):
    pass


class AmbiguousDualEdge(CubingError):
    pass


class InvalidStep(CubingError):
    pass


class MetricMismatch(CubingError):
    pass


class AutomorphismError(CubingError):
    pass


class NotABijection(AutomorphismError):
    pass


class EdgeNotPreserved(AutomorphismError):
    pass


class SquareNotPreserved(AutomorphismError):
    pass


class GeodesicFailure(CubingError):
    def __init__(self, power, wall=None):
        self.power = power
        self.wall = wall
        super().__init__(f"axis window repeats wall {wall} at power {power}")


class WindowNotInvariant(CubingError):
    pass


class WindowTooShort(CubingError):
    pass


class RelocationFailure(CubingError):
    pass


class PreconditionError(CubingError):
    pass


class WallspaceError(CubingError):
    pass


class ConfigError(CubingError):
    pass
