from polyextrema.optimize.cap import (
    CaseProbe,
    cap_derivative,
    cap_function,
    lemma4_case_probe,
    maximize_cap_function,
)
from polyextrema.optimize.oracle import (
    OracleResult,
    batch_is_simple,
    brute_force_oracle,
    grid_granularity_bound,
    oracle_search,
)
from polyextrema.optimize.search import (
    CATALOG,
    ConstraintSet,
    Direction,
    Objective,
    ObjectiveKind,
    OptimizationRun,
    optimize,
    optimize_catalog,
)

__all__ = [
    "CATALOG", "CaseProbe", "ConstraintSet", "Direction", "Objective", "ObjectiveKind",
    "OptimizationRun", "OracleResult", "batch_is_simple", "brute_force_oracle", "cap_derivative",
    "cap_function", "grid_granularity_bound", "lemma4_case_probe", "maximize_cap_function",
    "optimize", "optimize_catalog", "oracle_search",
]
