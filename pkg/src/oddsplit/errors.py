"""Exception hierarchy shared by all oddsplit modules."""

from __future__ import annotations


class OddsplitError(Exception):
    """Base class for every error raised by this package."""


class LoopEdge(OddsplitError, ValueError):
    def __init__(self, vertex: int, line: int | None = None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"loop at vertex {vertex}{where}")


class VertexOutOfRange(OddsplitError, ValueError):
    def __init__(self, vertex: int, n: int, line: int | None = None):
        self.vertex = vertex
        self.n = n
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"vertex {vertex} outside 0..{n - 1}{where}")


class OverlappingSets(OddsplitError, ValueError):
    pass


class OddOrderComponent(OddsplitError):
    """No odd factor: ``component`` has an odd number of vertices."""

    def __init__(self, component: frozenset[int]):
        self.component = component
        super().__init__(f"component {sorted(component)} has odd order")


class ParityViolation(OddsplitError):
    """No T-join: ``component`` holds an odd number of target vertices."""

    def __init__(self, component: frozenset[int]):
        self.component = component
        super().__init__(f"component {sorted(component)} has an odd number of T-vertices")


class MissingConstantNode(OddsplitError, ValueError):
    pass


class NotDecomposable(OddsplitError):
    """The requested decomposition does not exist.

    ``certificate`` depends on the mode: a ``SubsetWitness`` for two-odd, an
    odd-order component (frozenset) for even-odd, a vertex for two-even.
    """

    def __init__(self, mode: str, certificate):
        self.mode = mode
        self.certificate = certificate
        super().__init__(f"not decomposable ({mode}): {certificate!r}")


class TooManyComponents(OddsplitError):
    pass


class TooManyEdges(OddsplitError):
    pass


class InfeasibleSpec(OddsplitError, ValueError):
    pass


class NotAPartition(OddsplitError, ValueError):
    pass


class ParseError(OddsplitError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
