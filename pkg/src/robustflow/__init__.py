"""Exact maximum robust flow toolkit.

Robust flow value of a path flow: its total value minus the most flow a
worst-case failure of k arcs can destroy.  This package provides the
exact LP solvers (full scenario enumeration and row generation with dual
certificates), polynomial special-case solvers, two hardness-reduction
gadget generators with verification oracles, value-preserving instance
transformations, and a uniform multi-route approximation baseline — all
over exact rational arithmetic.
"""

from .errors import (
    BudgetError,
    CapacityOutOfRange,
    EnumerationBudgetExceeded,
    FormatError,
    InfiniteCapacity,
    InvalidCliqueSize,
    InvalidTerminals,
    NonIntegralCapacity,
    NotAFlow,
    NotDisjoint,
    NotFeasible,
    NotUnitCapacity,
    PathLimitExceeded,
    RobustFlowError,
    SizeMismatch,
    UnboundedFlow,
)
from .evaluation import (
    arc_flow_value,
    destroyed_value,
    nominal_value,
    robust_value,
    worst_case_scenario,
)
from .graphs import enumerate_paths, max_flow, min_cut, path_decompose
from .model import (
    INF,
    Arc,
    Cut,
    ExtendedRational,
    Instance,
    Path,
    PathFlow,
    Scenario,
    validate_instance,
)

__version__ = "0.1.0"
