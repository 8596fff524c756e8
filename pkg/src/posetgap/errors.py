"""Exception hierarchy shared by every module of the package."""


class PosetError(ValueError):
    """Base class for all errors raised by posetgap."""


class DuplicateLabel(PosetError):
    pass


class UnknownLabel(PosetError):
    pass


class CycleDetected(PosetError):
    pass


class IndexOutOfRange(PosetError, IndexError):
    pass


class SizeTooLarge(PosetError):
    pass


class TooManyChains(PosetError):
    pass


class TooManyAntichains(PosetError):
    pass


class NotMinimal(PosetError):
    pass


class IsIsolated(PosetError):
    pass


class PosetSyntaxError(PosetError):
    """Malformed poset text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class TheoremViolation(AssertionError):
    """A proven identity failed to hold; always an implementation bug."""
