"""Exhaustive reference solver.

Assignments are enumerated in lexicographic order of
``(vertex id, chosen neighbour id)``, so returned witnesses are
deterministic. Self-loops are dropped before searching.
"""

from __future__ import annotations

from .arrays import GraphArrays
from .core import BudgetExceeded, DelegationGraph, DelegationSolution, Instance

DEFAULT_BUDGET = 15


def _prepare(graph: DelegationGraph, budget: int) -> GraphArrays:
    arr = GraphArrays.from_graph(graph)
    if len(arr.order) > budget:
        raise BudgetExceeded(f"{len(arr.order)} non-sinks exceed oracle budget {budget}")
    return arr


def brute_force_decide(instance: Instance, budget: int = DEFAULT_BUDGET) -> DelegationSolution | None:
    """Lexicographically first resolving assignment with max load <= lambda, else None."""
    arr = _prepare(instance.graph, budget)
    _, sol = arr.search(instance.lam)
    return sol


def brute_force_optimize(graph: DelegationGraph, budget: int = DEFAULT_BUDGET):
    """Return ``(lambda_star, witness)`` or None when no resolving assignment exists."""
    arr = _prepare(graph, budget)
    n_sinks = int(arr.is_sink.sum())
    if n_sinks == 0:
        return None
    total = int(arr.weight.sum())
    lower = max(-(-total // n_sinks), int(arr.weight[arr.is_sink].max()))
    val, sol = arr.search(total, optimize=True, lower=lower)
    if sol is None:
        return None
    return val, sol
