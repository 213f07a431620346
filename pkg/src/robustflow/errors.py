"""Exception hierarchy shared by all robustflow modules."""


class RobustFlowError(Exception):
    """Base class for all library errors."""


class BudgetError(RobustFlowError):
    """An enumeration gate fired; the instance is outside desk scale."""


class PathLimitExceeded(BudgetError):
    """More simple source-sink paths exist than the caller allowed."""


class EnumerationBudgetExceeded(BudgetError):
    """A subset/search-space enumeration would exceed its budget."""


class InfiniteCapacity(RobustFlowError):
    """An operation requiring finite capacities met an INF arc."""


class NotAFlow(RobustFlowError):
    """Arc values violate nonnegativity or flow conservation."""


class NotUnitCapacity(RobustFlowError):
    """The unit-capacity solver was called on a non-unit instance."""


class CapacityOutOfRange(RobustFlowError):
    """The capacity-at-most-2 solver was called outside {1, 2}."""


class NonIntegralCapacity(RobustFlowError):
    """A transformation requiring integral capacities met a fraction or INF."""


class UnboundedFlow(RobustFlowError):
    """The instance admits an all-infinite source-sink path."""


class NotFeasible(RobustFlowError):
    """A path flow violates the capacities of its instance."""


class InvalidCliqueSize(RobustFlowError):
    """Clique gadget parameter out of range (needs 2 <= k' <= |V'|)."""


class SizeMismatch(RobustFlowError):
    """A structured failure scenario does not have exactly k arcs."""


class InvalidTerminals(RobustFlowError):
    """Arc-disjoint-paths gadget terminals are not nodes of the input."""


class NotDisjoint(RobustFlowError):
    """Witness construction requires arc-disjoint demand paths."""


class FormatError(RobustFlowError):
    """A text-format file could not be parsed."""
