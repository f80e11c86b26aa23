"""Solvers for resolving delegation graphs in liquid democracy."""

from .core import (
    BudgetExceeded,
    CycleError,
    DelegationGraph,
    DelegationSolution,
    GraphError,
    Instance,
    ResDelError,
    SinkLoadReport,
    Violation,
    build_graph,
    is_valid,
    sink_loads,
    unit_graph,
    validate,
)
from .driver import decide, optimize_driver
from .edges import edge_parameter, solve_edges
from .fractional import FractionalSolution, fractional_feasible, fractional_optimize
from .gen import random_instance
from .nonsink import SolveResult, SolverStats, solve_nonsink
from .oracle import brute_force_decide, brute_force_optimize
from .reduce import (
    Contract,
    Deferred,
    LiftFailure,
    ReductionTrace,
    kernel_check,
    lift,
    rd1_contract,
    rd2_strip_self_loops,
    rd3_defer,
    reduce_exhaustively,
    SelfLoopRemoved,
)

__version__ = "0.1.0"
