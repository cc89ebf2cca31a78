"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedOrderError(ValueError):
    """Graph order outside what an operation supports."""


class UndefinedInvariantError(ValueError):
    """es_chi requested for a graph with chromatic number at most one."""


class ParameterError(ValueError):
    """Invalid construction parameters (family parameters, glue vertex, k)."""
