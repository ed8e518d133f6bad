"""Exception hierarchy shared by the library, the harness and the CLI."""


class IndsetError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(IndsetError, ValueError):
    """An input exceeds a vertex or enumeration limit."""


class DomainError(IndsetError, ValueError):
    """An operation was called outside its precondition."""


class InvalidVertexError(DomainError, IndexError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"Vertex {vertex} is not in 0..{n - 1}" if n else f"Vertex {vertex} is not in an empty graph")
        self.vertex = vertex
        self.n = n


class ParseError(IndsetError, ValueError):
    """
    Malformed graph text.

    `offset` is the byte offset for graph6 input, `line` the 1-based line
    number for edge lists; whichever does not apply is None.
    """

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = ""
        if offset is not None:
            where = f" (at byte {offset})"
        elif line is not None:
            where = f" (at line {line})"
        super().__init__(f"{message}{where}")
        self.offset = offset
        self.line = line
