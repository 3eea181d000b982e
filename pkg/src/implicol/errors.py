"""Exception hierarchy shared by every module."""


class ImplicolError(Exception):
    """Base class for library errors."""


class GraphError(ImplicolError, ValueError):
    """Invalid graph operation: self-loops, missing vertices, non-edges."""


class RefusalError(ImplicolError):
    """An exponential routine declined an input above its configured cap."""


class PreconditionError(ImplicolError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class DimacsParseError(ImplicolError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
