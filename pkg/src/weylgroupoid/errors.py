"""Exception hierarchy shared by every module of the package."""


class WeylGroupoidError(Exception):
    """Base class for all errors raised by this package."""


class GraphSyntaxError(WeylGroupoidError):
    """The graph document is not well-formed (bad JSON or wrong shape)."""


class ValidationError(WeylGroupoidError):
    """A structural invariant is violated.

    ``invariant`` names the violated condition, e.g. ``"involution"``,
    ``"gcm"`` or ``"compatibility"``.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant
        self.message = message


class UnknownName(WeylGroupoidError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class BudgetExceeded(WeylGroupoidError):
    """A closure did not stabilize within its budget (non-finite input)."""


class NotReduced(WeylGroupoidError):
    pass


class RingMismatch(WeylGroupoidError):
    pass


class GroupoidMismatch(WeylGroupoidError):
    pass


class InvalidCovering(WeylGroupoidError):
    pass


class RankNotTwo(WeylGroupoidError):
    pass


class RootNotPresent(WeylGroupoidError):
    pass


class DifferentHomSet(WeylGroupoidError):
    pass


class EmptyHomSet(WeylGroupoidError):
    pass
