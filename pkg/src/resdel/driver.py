"""Decision-solver dispatch and the lambda-minimising driver."""

from __future__ import annotations

import logging

from .core import BudgetExceeded, DelegationGraph, DelegationSolution, Instance
from .edges import edge_parameter, solve_edges
from .nonsink import SolveResult, SolverStats, solve_nonsink
from .oracle import brute_force_decide

log = logging.getLogger(__name__)

ALGORITHMS = ("oracle", "nonsink", "edges", "auto")
AUTO_EDGE_LIMIT = 20


def _oracle(instance: Instance) -> SolveResult:
    sol = brute_force_decide(instance)
    return SolveResult(sol is not None, sol, SolverStats())


def decide(instance: Instance, algo: str = "auto") -> SolveResult:
    """Run one decision solver.

    ``auto`` uses the edge solver when ``|E| - |V| + |T| <= 20`` and the
    non-sink solver otherwise, falling back to the oracle if the
    non-sink solver runs out of budget.
    """
    if algo == "oracle":
        return _oracle(instance)
    if algo == "nonsink":
        return solve_nonsink(instance)
    if algo == "edges":
        return solve_edges(instance)
    if algo != "auto":
        raise ValueError(f"unknown algorithm {algo!r}")
    k = edge_parameter(instance.graph)
    if k <= AUTO_EDGE_LIMIT:
        log.debug("auto: edges solver (k=%d)", k)
        return solve_edges(instance)
    try:
        log.debug("auto: non-sink solver (k=%d)", k)
        return solve_nonsink(instance)
    except BudgetExceeded:
        log.debug("auto: non-sink budget exhausted, trying oracle")
        return _oracle(instance)


def optimize_driver(graph: DelegationGraph, algo: str = "auto") -> tuple[int, DelegationSolution] | None:
    """Least lambda with a yes answer, by binary search over
    ``[ceil(W / |T|), W]`` with ``W`` the total weight; None if even
    ``W`` fails."""
    total = graph.total_weight
    n_sinks = len(graph.sinks)
    if n_sinks == 0:
        return None
    hi_res = decide(Instance(graph, total), algo)
    if not hi_res.answer:
        return None
    lo, hi, best = -(-total // n_sinks), total, hi_res.solution
    while lo < hi:
        mid = (lo + hi) // 2
        res = decide(Instance(graph, mid), algo)
        if res.answer:
            hi, best = mid, res.solution
        else:
            lo = mid + 1
    return hi, best
