"""
exceptions raised across SomborAnalysis.

input problems are ValueError subclasses, resource and consistency
problems are RuntimeError subclasses.
"""


class DegreeSequenceError(ValueError):
    """invalid or degenerate degree sequence."""


class TreeValidationError(ValueError):
    """candidate edge set is not a tree on 0..n-1."""

    def __init__(self, reason, detail=""):
        self.reason = reason
        self.detail = detail
        message = reason if not detail else "%s: %s" % (reason, detail)
        super().__init__(message)


class TreeFormatError(ValueError):
    """malformed tree file."""


class PruferError(ValueError):
    """Prufer code of the wrong length or with labels out of range."""


class StaleSwapError(ValueError):
    """an edge swap no longer matches the tree it is applied to."""


class NotPendantError(ValueError):
    pass


class PathConditionError(ValueError):
    """the tree has a path v1..vt with d(v1) < d(vt) and d(v2) > d(v_{t-1})."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__("path condition violated along %s" % (list(witness.path),))


class NoStrippableVertexError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """enumeration would produce more labeled trees than allowed."""

    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__("enumeration needs %d labeled trees, budget is %d" % (count, budget))


class StepLimitError(RuntimeError):
    """local search did not reach a fixed point within its step guard."""


class EnumerationError(RuntimeError):
    """enumerated tree count disagrees with the multinomial count."""
