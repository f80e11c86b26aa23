"""Bounded search tree parameterised by the number of deleted edges.

Every feasible solution keeps exactly one out-edge per non-sink, so it
deletes ``k = |E| - |V| + |T|`` edges. While ``k > 0`` the solver takes
a vertex of maximum out-degree ``l`` (smallest id on ties), splits its
out-edges sorted by target into the first ``l // 2`` and the rest, and
recurses once with each group deleted. At ``k = 0`` the remaining edges
form the only candidate assignment, which is checked directly.

Nodes are also cut when they provably hold no solution: a non-sink has
lost all out-edges or can no longer reach a sink, or the vertices left
with a single out-edge already close a cycle or overload a sink. These
cuts only shrink the tree.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .core import BudgetExceeded, DelegationGraph, DelegationSolution, Instance
from .nonsink import SolveResult, SolverStats
from .reduce import rd2_strip_self_loops

DEFAULT_NODE_BUDGET = 1_000_000


def edge_parameter(graph: DelegationGraph) -> int:
    g, _ = rd2_strip_self_loops(graph)
    return len(g.edges) - len(g) + len(g.sinks)


def solve_edges(instance: Instance, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    g, _ = rd2_strip_self_loops(instance.graph)
    ids = g.vertices
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    weight = np.array([g.weight[v] for v in ids], dtype=np.int64)
    is_sink = np.array([v in g.sinks for v in ids], dtype=bool)
    lam = instance.lam
    stats = SolverStats()

    def _hopeless(out) -> bool:
        succ = np.array([o[0] if len(o) == 1 and not is_sink[i] else -1 for i, o in enumerate(out)], dtype=np.int64)
        worst, _ = kernels.partial_max(succ, weight, is_sink)
        if worst < 0 or worst > lam:
            return True
        pred = [[] for _ in range(n)]
        for u in range(n):
            for w in out[u]:
                pred[w].append(u)
        seen = [bool(x) for x in is_sink]
        todo = [i for i in range(n) if seen[i]]
        while todo:
            for u in pred[todo.pop()]:
                if not seen[u]:
                    seen[u] = True
                    todo.append(u)
        return not all(seen)

    def visit(out: list, k: int):
        stats.nodes_explored += 1
        if stats.nodes_explored > node_budget:
            raise BudgetExceeded(f"node budget {node_budget} exceeded")
        if any(not out[i] and not is_sink[i] for i in range(n)):
            return None
        if k > 0 and _hopeless(out):
            return None
        if k == 0:
            stats.leaf_enumerations += 1
            succ = np.array([o[0] if o else -1 for o in out], dtype=np.int64)
            loads, ok = kernels.chain_loads(succ, weight, is_sink)
            if ok and int(loads.max(initial=0)) <= lam:
                return succ
            return None
        stats.rule_applications["B.1"] += 1
        v = max(range(n), key=lambda i: (len(out[i]), -i))
        nbrs = out[v]
        half = len(nbrs) // 2
        for keep, dropped in ((nbrs[:half], len(nbrs) - half), (nbrs[half:], half)):
            child = list(out)
            child[v] = keep
            found = visit(child, k - dropped)
            if found is not None:
                return found
        return None

    out0 = [tuple(index[w] for w in g.out[v]) for v in ids]
    k0 = len(g.edges) - n + len(g.sinks)
    if k0 < 0:
        # Some non-sink has no out-edge; impossible for a derived sink set.
        return SolveResult(False, None, stats)
    if g.total_weight > lam * len(g.sinks):
        return SolveResult(False, None, stats)
    succ = visit(out0, k0)
    if succ is None:
        return SolveResult(False, None, stats)
    choice = {ids[i]: ids[int(succ[i])] for i in range(n) if not is_sink[i]}
    return SolveResult(True, DelegationSolution(choice), stats)
