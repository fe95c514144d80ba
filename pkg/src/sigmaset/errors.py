"""Exception hierarchy shared by every sigmaset module."""

from __future__ import annotations


class SigmaError(Exception):
    """Base class for all library errors."""


class ExclusionViolation(SigmaError):
    """A collection holds an element together with its antielement."""

    def __init__(self, element, anti):
        self.element = element
        self.anti = anti
        super().__init__(f"exclusion violation: {element} and {anti} cannot be co-members")


class NoAntiset(SigmaError):
    """The antielement/antiset needed by an operation does not exist."""

    def __init__(self, value, blocker=None):
        self.value = value
        self.blocker = blocker
        detail = f" (blocked by {blocker})" if blocker is not None else ""
        super().__init__(f"{value} has no antiset{detail}")


class NotAPair(SigmaError):
    pass


class PairOutOfCarrier(SigmaError):
    pass


class NotTotal(SigmaError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"relation assigns no value to {x}")


class NotSingleValued(SigmaError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"relation assigns several values to {x}")


class EmptyComposition(SigmaError):
    pass


class NotBijective(SigmaError):
    pass


class NotClosed(SigmaError):
    def __init__(self, x, y, result):
        self.x, self.y, self.result = x, y, result
        super().__init__(f"{x} op {y} = {result} leaves the space")


class BudgetExceeded(SigmaError):
    pass


class GoldenMismatch(SigmaError):
    pass
