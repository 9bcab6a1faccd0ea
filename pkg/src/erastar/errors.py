"""Exception types raised by the library."""


class MapParseError(ValueError):
    pass


class MalformedHeader(MapParseError):
    pass


class DimensionMismatch(MapParseError):
    pass


class UnknownTerrainChar(MapParseError):
    pass


class OutOfBounds(ValueError):
    pass


class OnObstacle(ValueError):
    pass


class InvalidEndpoint(ValueError):
    pass


class BrokenChain(RuntimeError):
    """Predecessor walk did not reach the start cell."""


class ConstructionMismatch(AssertionError):
    """A rotated penalty matrix disagrees with direct evaluation."""
