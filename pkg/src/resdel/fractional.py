"""Fractional delegation: minimise the maximum sink load when each
non-sink may split its accumulated weight over its out-edges.

Feasibility for a cap ``z`` is a max-flow question: a source feeds
``weight(s)`` into every non-sink ``s``, delegation edges are uncapped,
and each sink ``t`` drains into a collector through capacity
``z - weight(t)``. All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import DelegationGraph
from .reduce import rd2_strip_self_loops


@dataclass(frozen=True)
class FractionalSolution:
    flow: Mapping[tuple[int, int], Fraction]
    objective: Fraction


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class _FlowNetwork:
    """Edmonds-Karp on an adjacency list of residual arcs."""

    def __init__(self, n: int):
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[Fraction] = []

    def add(self, u: int, v: int, cap) -> int:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(Fraction(cap))
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(Fraction(0))
        return len(self.to) - 2

    def max_flow(self, s: int, t: int) -> Fraction:
        total = Fraction(0)
        while True:
            parent = [-1] * len(self.head)
            parent[s] = -2
            queue = deque([s])
            while queue and parent[t] == -1:
                u = queue.popleft()
                for a in self.head[u]:
                    v = self.to[a]
                    if parent[v] == -1 and self.cap[a] > 0:
                        parent[v] = a
                        queue.append(v)
            if parent[t] == -1:
                return total
            push = None
            v = t
            while v != s:
                a = parent[v]
                push = self.cap[a] if push is None else min(push, self.cap[a])
                v = self.to[a ^ 1]
            v = t
            while v != s:
                a = parent[v]
                self.cap[a] -= push
                self.cap[a ^ 1] += push
                v = self.to[a ^ 1]
            total += push


def fractional_feasible(graph: DelegationGraph, z) -> FractionalSolution | None:
    """Witness flow with every sink load at most ``z``, or None."""
    z = Fraction(z)
    g, _ = rd2_strip_self_loops(graph)
    sinks = g.sinks
    if any(g.weight[t] > z for t in sinks):
        return None
    ids = g.vertices
    index = {v: i for i, v in enumerate(ids)}
    source, collector = len(ids), len(ids) + 1
    net = _FlowNetwork(len(ids) + 2)
    supply = sum(g.weight[v] for v in ids if v not in sinks)
    for v in ids:
        if v not in sinks:
            net.add(source, index[v], g.weight[v])
    # Capacity ``supply`` is as good as unbounded: some maximum flow is
    # a sum of simple paths, each edge carrying at most ``supply``.
    arcs = {}
    for u, v in sorted(g.edges):
        arcs[(u, v)] = net.add(index[u], index[v], supply)
    for t in sorted(sinks):
        net.add(index[t], collector, z - g.weight[t])
    if net.max_flow(source, collector) != supply:
        return None
    flow = {}
    for e, a in arcs.items():
        f = net.cap[a ^ 1]
        if f:
            flow[e] = f
    return FractionalSolution(flow, z)


def fractional_optimize(graph: DelegationGraph):
    """Return ``(z_star, witness)`` or None if some non-sink reaches no sink.

    The optimum has denominator at most ``|T|``: a minimum cut has
    capacity ``c + b z`` with integer ``c`` and ``b <= |T|`` sink arcs.
    Bisection narrows ``(lo, hi]`` below ``1 / |T|^2``, which holds at
    most one such fraction.
    """
    g, _ = rd2_strip_self_loops(graph)
    n_sinks = len(g.sinks)
    total = Fraction(g.total_weight)
    if n_sinks == 0:
        return None
    top = fractional_feasible(g, total)
    if top is None:
        return None
    lo = total / n_sinks
    if (sol := fractional_feasible(g, lo)) is not None:
        return lo, sol
    hi, best = total, top
    width = Fraction(1, n_sinks * n_sinks)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        sol = fractional_feasible(g, mid)
        if sol is None:
            lo = mid
        else:
            hi, best = mid, sol
    for q in range(1, n_sinks + 1):
        cand = Fraction(math.floor(hi * q), q)
        if lo < cand <= hi:
            if cand == hi:
                return hi, best
            sol = fractional_feasible(g, cand)
            if sol is not None:
                return cand, sol
    raise AssertionError(f"no fraction with denominator <= {n_sinks} in ({lo}, {hi}]")
