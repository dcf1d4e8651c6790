"""Exception hierarchy shared by every module of the package."""


class TaggedSetError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(TaggedSetError):
    """Two operands carry values of different dimension."""


class EmptySetError(TaggedSetError):
    """An operation that needs a nonempty operand received an empty one."""


class OverlapError(TaggedSetError):
    """Two operands share a tagged point (same value and same series)."""


class PreconditionError(TaggedSetError):
    """An operand violates a precondition other than emptiness or dimension."""


class CutError(TaggedSetError):
    """A cut was requested at an invalid position or in an invalid mode."""


class FourthTypeError(CutError):
    """The two sides of a cut do not meet: the value projection has a gap.

    ``gap`` is the :class:`~disordered.line.Span` of missing positions.
    """

    def __init__(self, message, gap):
        super().__init__(message)
        self.gap = gap


class ScopeError(TaggedSetError):
    """The input lies outside the domain an equivalence check is stated for."""


class TrajectoryError(TaggedSetError):
    """Phases are malformed or do not abut in parameter."""


class DocumentError(TaggedSetError):
    """A description file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        msg = super().__str__()
        if self.line is not None:
            return f"{self.line}:{self.column}: {msg}"
        return msg
