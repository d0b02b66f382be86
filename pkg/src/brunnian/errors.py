"""Exception hierarchy shared by every module of the package."""


class BrunnianError(ValueError):
    """Base class for all validation and contract errors."""


class OutOfRange(BrunnianError):
    """A subset or ground size falls outside the ground set."""


class NotClosed(BrunnianError):
    """Two overlapping members whose union is missing."""

    def __init__(self, a: int, b: int, message: str = "") -> None:
        self.a = a
        self.b = b
        super().__init__(message or f"union of overlapping members {a:#b} and {b:#b} is missing")


class NotOverlapping(BrunnianError):
    """A subset fails to meet both blocks of a dissociation."""


class NotGlobal(BrunnianError):
    """A dissociation whose domain is not the whole ground set."""


class GroundMismatch(BrunnianError):
    """Operands live on ground sets of different sizes."""


class EmptySubset(BrunnianError):
    pass


class TooSmall(BrunnianError):
    pass


class TooLarge(BrunnianError):
    pass


class ProbSumNotOne(BrunnianError):
    pass


class NegativeProbability(BrunnianError):
    pass


class LengthMismatch(BrunnianError):
    pass


class ParseError(BrunnianError):
    """Malformed input file; carries the source name and 1-based line number."""

    def __init__(self, source: str, line: int, rule: str) -> None:
        self.source = source
        self.line = line
        self.rule = rule
        super().__init__(f"{source}:{line}: {rule}")
