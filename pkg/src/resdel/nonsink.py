"""Bounded search tree parameterised by the number of non-sink vertices.

Each search node applies, in order: the weight-based kernel bound,
contraction and self-loop stripping to a fixed point, deferral of in-degree-0
vertices with large out-degree, then branching on a vertex ``v`` with
out-degree above ``2 (k - 1)`` and positive in-degree over every subset
of its in-neighbours (those inside the subset keep only their edge to
``v``, the rest lose it). When no vertex qualifies, the remaining
assignments are enumerated exhaustively.

Deferral is only safe for unit weights, so a deferred vertex that cannot
be placed is handled by branching on each of its out-edges instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .arrays import GraphArrays
from .core import BudgetExceeded, DelegationGraph, DelegationSolution, Instance
from .reduce import (
    Contract,
    Deferred,
    LiftFailure,
    SelfLoopRemoved,
    kernel_check,
    lift,
    rd2_strip_self_loops,
    rd3_defer,
    reduce_exhaustively,
)

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass
class SolverStats:
    nodes_explored: int = 0
    rule_applications: Counter = field(default_factory=Counter)
    leaf_enumerations: int = 0


@dataclass
class SolveResult:
    answer: bool
    solution: DelegationSolution | None
    stats: SolverStats

    def __bool__(self):
        return self.answer


def _bump(counter: Counter, key: str, n: int):
    if n:
        counter[key] += n


class _Search:
    def __init__(self, lam: int, required: frozenset, node_budget: int):
        self.lam = lam
        self.required = required  # vertices that must keep an out-edge
        self.node_budget = node_budget
        self.stats = SolverStats()

    def _tick(self):
        self.stats.nodes_explored += 1
        if self.stats.nodes_explored > self.node_budget:
            raise BudgetExceeded(f"node budget {self.node_budget} exceeded")

    def _dead(self, g: DelegationGraph) -> bool:
        if any(v in self.required for v in g.sinks):
            return True
        if any(g.weight[t] > self.lam for t in g.sinks):
            return True
        return not kernel_check(Instance(g, self.lam))

    def solve(self, g: DelegationGraph) -> DelegationSolution | None:
        self._tick()
        rules = self.stats.rule_applications
        if not kernel_check(Instance(g, self.lam)):
            rules["kernel"] += 1
            return None
        g1, tr1 = reduce_exhaustively(g)
        _bump(rules, "RD.1", tr1.count(Contract))
        _bump(rules, "RD.2", tr1.count(SelfLoopRemoved))
        if self._dead(g1):
            return None
        g2, tr3 = rd3_defer(g1)
        _bump(rules, "RD.3", tr3.count(Deferred))

        sol2 = self._branch_or_enumerate(g2)
        if sol2 is None:
            # Dropping in-degree-0 vertices only relaxes the instance.
            return None
        try:
            sol1 = lift(tr3, sol2, Instance(g1, self.lam))
        except LiftFailure as exc:
            rules["RD.3-fallback"] += 1
            sol1 = self._branch_on_out_edges(g1, exc.vertex)
            if sol1 is None:
                return None
        return lift(tr1, sol1, Instance(g, self.lam))

    def _branch_on_out_edges(self, g: DelegationGraph, v: int) -> DelegationSolution | None:
        others = g.edges - {(v, w) for w in g.out[v]}
        for w in g.out[v]:
            sol = self.solve(g.with_edges(others | {(v, w)}))
            if sol is not None:
                return sol
        return None

    def _branch_or_enumerate(self, g: DelegationGraph) -> DelegationSolution | None:
        k = len(g.nonsinks)
        threshold = 2 * (k - 1)
        pivot = next(
            (v for v in g.nonsinks if len(g.out[v]) > threshold and g.inn[v]),
            None,
        )
        if pivot is None:
            return self._enumerate(g)
        self.stats.rule_applications["B.1"] += 1
        preds = g.inn[pivot]
        for size in range(len(preds) + 1):
            for chosen in combinations(preds, size):
                chosen = set(chosen)
                edges = set()
                for u, w in g.edges:
                    if u in chosen:
                        if w == pivot:
                            edges.add((u, w))
                    elif w != pivot or u not in preds:
                        edges.add((u, w))
                sol = self.solve(g.with_edges(edges))
                if sol is not None:
                    return sol
        return None

    def _enumerate(self, g: DelegationGraph) -> DelegationSolution | None:
        self.stats.leaf_enumerations += 1
        _, sol = GraphArrays.from_graph(g).search(self.lam)
        return sol


def solve_nonsink(instance: Instance, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Decide the instance; a yes-witness refers to the self-loop-free input graph."""
    g, _ = rd2_strip_self_loops(instance.graph)
    search = _Search(instance.lam, frozenset(g.nonsinks), node_budget)
    sol = search.solve(g)
    return SolveResult(sol is not None, sol, search.stats)
