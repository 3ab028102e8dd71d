"""Exception types shared across the package."""


class PuiseuxError(Exception):
    """Base class for every error raised by this package."""


class InputError(PuiseuxError, ValueError):
    """An argument violates an operation's preconditions."""


class NotAMemberError(PuiseuxError):
    """A query element does not belong to the monoid it was asked about."""


class NeedsBoundError(PuiseuxError):
    """A query on an infinite family needs an explicit truncation bound.

    Raised instead of silently defaulting: an answer about an infinite
    object computed at a finite bound is evidence, and the bound must be
    the caller's conscious choice.
    """


class BudgetExceededError(PuiseuxError):
    """An enumeration ran out of its search-node budget.

    Never a silent truncation: a partial enumeration is worthless for the
    exact set semantics promised by the API, so exceeding the budget is an
    error, not a result.
    """
