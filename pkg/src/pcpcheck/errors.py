"""Exception types shared by every module of the package."""


class PcpError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PcpError):
    """Presentation data violates a structural constraint."""


class ExponentOutOfRange(ValidationError):
    """A tail entry or coefficient lies outside [0, r_k) at a finite-order position."""


class BadIndex(ValidationError):
    """A relation or tail mentions a generator index it must not."""


class MissingRelation(ValidationError):
    """A relation is present exactly where the order data forbids it (or vice versa)."""


class DerivedTablesMissing(PcpError):
    """Collection was requested before the inverse rewrite tables were computed."""


class NotNilpotentForm(PcpError):
    """The presentation's conjugation tails do not have the leading-generator shape."""


class WeightDivergence(PcpError):
    """The weight fixpoint iteration did not stabilise."""


class BudgetExceeded(PcpError):
    """Collection ran out of its step budget.  Never silently truncates."""

    def __init__(self, message, partial_trace=None):
        super().__init__(message)
        self.partial_trace = partial_trace


class CollectionBudgetExceeded(BudgetExceeded):
    """The budget ran out while bootstrapping the derived inverse relations."""


class RingMismatch(PcpError):
    """Operands do not belong to the ring an operation was asked to work in."""


class UnsupportedRing(PcpError):
    """The requested combination of ring and relative orders is not defined."""


class InfiniteOrder(PcpError):
    """An exhaustive check was asked for on a presentation with infinite orders."""


class CapExceeded(PcpError):
    """An exhaustive check would exceed the configured size cap."""


class PresentationSyntaxError(PcpError):
    """Malformed presentation text.  Carries a 1-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DuplicateRelation(PcpError):
    """Two declarations share a left-hand side (or declare conflicting orders)."""


class UnknownGenerator(PcpError):
    """A declaration mentions a generator outside 1..n."""
