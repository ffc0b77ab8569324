"""Exception types shared across the package."""


class PkTuranError(Exception):
    """Base class for all package errors."""


class CapacityError(PkTuranError, ValueError):
    """A size limit was exceeded (vertex count, canonical-form cap, search cap)."""


class LoopError(PkTuranError, ValueError):
    """Attempt to add an edge from a vertex to itself."""


class Graph6Error(PkTuranError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte offset where decoding failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ParameterError(PkTuranError, ValueError):
    """Construction or bound parameters violate a precondition."""


class PartitionError(PkTuranError, ValueError):
    """A vertex bipartition is not a valid partition of the graph's vertices."""
