"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 2 for malformed input,
3 for violated preconditions, 4 for cap/timeout refusals.
"""


class GraphError(Exception):
    exit_code = 3


class InvalidEdge(GraphError, ValueError):
    exit_code = 2


class ParseError(GraphError, ValueError):
    exit_code = 2

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Disconnected(GraphError):
    pass


class CapExceeded(GraphError):
    exit_code = 4


class Timeout(GraphError):
    exit_code = 4


class NotTwinFree(GraphError):
    pass


class NotDistinguishing(GraphError):
    pass


class NotMinimalDominating(GraphError):
    pass


class NotLocatingDominating(GraphError):
    pass


class StarIsK2(GraphError):
    """The twin graph is K2; the caller falls back to lambda - Det <= 1."""

    fallback_bound = 1


class NotMaximum(GraphError):
    pass


class HasC4(GraphError):
    pass


class NotATree(GraphError):
    pass


class BadParams(GraphError, ValueError):
    exit_code = 2


class UnknownStatement(GraphError, KeyError):
    exit_code = 2

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class MixedOrders(GraphError):
    pass
