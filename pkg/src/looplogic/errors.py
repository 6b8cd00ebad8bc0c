"""Exception hierarchy shared by all modules."""


class LoopLogicError(Exception):
    """Base class for every error raised by this package."""


class SortError(LoopLogicError):
    """A list function or relation was applied to an urelement."""


class ParseError(LoopLogicError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line else ""
        super().__init__(f"{message}{where}")


class UnboundVariable(LoopLogicError):
    pass


class StructureError(LoopLogicError):
    """Malformed structure file, unknown predicate, or arity mismatch."""


class ResourceError(LoopLogicError):
    """A configured step, size or expansion budget was exhausted."""


class PreconditionError(LoopLogicError):
    """Input lies outside the fragment an operation supports."""
