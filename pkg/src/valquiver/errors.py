"""Exception types.

Every error carries a ``code`` equal to its class name; the command line
front end prints it verbatim as ``error=<code>``.
"""


class QuiverError(Exception):
    """Base class for every error raised by this package."""

    @property
    def code(self):
        return type(self).__name__


class ParseError(QuiverError):
    pass


# valued graphs
class Disconnected(QuiverError):
    pass


class RankOne(QuiverError):
    pass


class LoopEdge(QuiverError):
    pass


class DuplicateEdge(QuiverError):
    pass


class VertexOutOfRange(QuiverError):
    pass


class AsymmetricZero(QuiverError):
    pass


class NoSymmetrizer(QuiverError):
    pass


# Weyl group
class MixedSignRoot(QuiverError):
    """An image of a simple root had coordinates of both signs."""


class CapExceeded(QuiverError):
    pass


class NotPermutation(QuiverError):
    pass


# orientations and filters
class UnorientedEdge(QuiverError):
    pass


class UnknownEdge(QuiverError):
    pass


class OrientedCycle(QuiverError):
    pass


class NotAFilter(QuiverError):
    pass


# admissible sequences
class NotASink(QuiverError):
    def __init__(self, position, vertex=None):
        self.position = position
        self.vertex = vertex
        msg = f"letter at position {position}"
        if vertex is not None:
            msg += f" (vertex {vertex})"
        super().__init__(msg + " is not a sink")


class DifferentBase(QuiverError):
    pass


class EmptySequence(QuiverError):
    pass


class Stuck(QuiverError):
    """No sink available while materializing a block; an internal invariant broke."""


# preprojectives
class NotPreprojective(QuiverError):
    """The principal sequence's positivity trace vanished, so no module carries it."""

    def __init__(self, r, x, position):
        self.r, self.x, self.position = r, x, position
        super().__init__(f"S_({r},{x}) hits zero at position {position}")


class InternalPositivityFailure(QuiverError):
    pass
