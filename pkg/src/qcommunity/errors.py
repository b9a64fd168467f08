"""Exception types raised across the package."""


class QCommunityError(Exception):
    """Base class for all package errors."""


class GraphParseError(QCommunityError, ValueError):
    pass


class NoEdges(GraphParseError):
    """The edge list contains no usable edge after cleaning."""


class MalformedLine(GraphParseError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: expected at least two tokens, got {line!r}")
        self.lineno = lineno
        self.line = line


class DimensionMismatch(QCommunityError, ValueError):
    pass


class InvalidSpins(QCommunityError, ValueError):
    """A spin vector holds values other than -1 and +1."""


class IndexOutOfRange(QCommunityError, IndexError):
    pass


class EmptySubset(QCommunityError, ValueError):
    pass


class SolverError(QCommunityError):
    pass


class TooManyVariables(SolverError, ValueError):
    pass


class TooManyQubits(SolverError, ValueError):
    pass
