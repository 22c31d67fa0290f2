from .checks import (
    BUDGET,
    FAILS,
    HOLDS,
    Budget,
    RandomizedReport,
    Verdict,
    check_d_group_choosable,
    check_group_choosable,
    check_group_colorable,
    randomized_colorability,
    recheck_witness,
)
from .constructive import (
    HardInstance,
    PreconditionError,
    TwoPhaseError,
    c3t_hard_labeling,
    greedy,
    two_phase_total,
)
from .solver import BudgetExceeded, DimensionError, Solver, solve, validate_coloring
