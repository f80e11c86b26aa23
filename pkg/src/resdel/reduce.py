"""Reduction rules for the non-sink parameterisation, the kernel bound,
and lifting of solutions back through a reduction trace.

Rules:

* contraction: a non-sink with a single out-edge ``v -> u`` (``u != v``)
  is merged into ``u``; ``u`` absorbs its weight and in-edges.
* self-loop stripping.
* deferral: a non-sink with in-degree 0 and out-degree above
  ``2 (k - 1)``, ``k`` the current non-sink count, is set aside and
  placed on a least-loaded sink neighbour during lifting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import (
    DelegationGraph,
    DelegationSolution,
    Instance,
    ResDelError,
    _freeze,
    sink_loads,
)


@dataclass(frozen=True)
class Contract:
    deleted: int
    into: int


@dataclass(frozen=True)
class SelfLoopRemoved:
    v: int


@dataclass(frozen=True)
class Deferred:
    v: int
    weight: int
    sink_neighbors: frozenset


Event = Union[Contract, SelfLoopRemoved, Deferred]


@dataclass(frozen=True)
class ReductionTrace:
    events: tuple = ()

    def __add__(self, other: ReductionTrace) -> ReductionTrace:
        return ReductionTrace(self.events + other.events)

    def __len__(self):
        return len(self.events)

    def count(self, kind) -> int:
        return sum(isinstance(e, kind) for e in self.events)


class LiftFailure(ResDelError):
    """A deferred vertex cannot be placed without overloading a sink."""

    def __init__(self, vertex, sink, load):
        super().__init__(f"deferred vertex {vertex} would push sink {sink} to load {load}")
        self.vertex = vertex


def _adjacency(graph: DelegationGraph):
    out = {v: set(ws) for v, ws in graph.out.items()}
    inn = {v: set(us) for v, us in graph.inn.items()}
    return dict(graph.weight), out, inn


def _assemble(weight, out) -> DelegationGraph:
    edges = frozenset((u, v) for u, ws in out.items() for v in ws)
    return DelegationGraph(_freeze(weight), edges)


def rd1_contract(graph: DelegationGraph) -> tuple[DelegationGraph, ReductionTrace]:
    """Contract single-out-edge vertices exhaustively, smallest id first.

    Self-loops created by redirection stay in place for
    :func:`rd2_strip_self_loops`.
    """
    weight, out, inn = _adjacency(graph)
    events = []
    while True:
        v = next(
            (x for x in sorted(out) if len(out[x]) == 1 and x not in out[x]),
            None,
        )
        if v is None:
            break
        (u,) = out[v]
        weight[u] += weight.pop(v)
        inn[u].discard(v)
        for p in inn.pop(v):
            out[p].discard(v)
            out[p].add(u)
            inn[u].add(p)
        del out[v]
        events.append(Contract(v, u))
    return _assemble(weight, out), ReductionTrace(tuple(events))


def rd2_strip_self_loops(graph: DelegationGraph) -> tuple[DelegationGraph, ReductionTrace]:
    loops = sorted(u for u, v in graph.edges if u == v)
    if not loops:
        return graph, ReductionTrace()
    edges = frozenset(e for e in graph.edges if e[0] != e[1])
    return graph.with_edges(edges), ReductionTrace(tuple(SelfLoopRemoved(v) for v in loops))


def rd3_defer(graph: DelegationGraph, k: int | None = None) -> tuple[DelegationGraph, ReductionTrace]:
    """Set aside in-degree-0 non-sinks whose out-degree exceeds ``2 (k - 1)``.

    ``k`` defaults to the current number of non-sinks and drops by one
    per deferral; the threshold is re-evaluated after each deletion.
    """
    weight, out, inn = _adjacency(graph)
    if k is None:
        k = sum(1 for ws in out.values() if ws)
    events = []
    while True:
        v = next(
            (x for x in sorted(out) if out[x] and not inn[x] and len(out[x]) > 2 * (k - 1)),
            None,
        )
        if v is None:
            break
        sink_nbrs = frozenset(w for w in out[v] if not out[w])
        events.append(Deferred(v, weight.pop(v), sink_nbrs))
        for w in out.pop(v):
            inn[w].discard(v)
        del inn[v]
        k -= 1
    if not events:
        return graph, ReductionTrace()
    return _assemble(weight, out), ReductionTrace(tuple(events))


def reduce_exhaustively(graph: DelegationGraph) -> tuple[DelegationGraph, ReductionTrace]:
    """Contraction then self-loop stripping, repeated to a fixed point."""
    trace = ReductionTrace()
    while True:
        graph, t1 = rd1_contract(graph)
        graph, t2 = rd2_strip_self_loops(graph)
        trace = trace + t1 + t2
        if not t2.events:
            return graph, trace


def kernel_check(instance: Instance) -> bool:
    """False when the instance is a certain no because of the ``lambda * t`` bound.

    Uses total vertex weight, which equals the vertex count on
    unit-weight graphs.
    """
    g = instance.graph
    return g.total_weight <= instance.lam * len(g.sinks)


def lift(trace: ReductionTrace, reduced_sol: DelegationSolution, instance: Instance) -> DelegationSolution:
    """Map a solution of the reduced graph back onto ``instance.graph``.

    ``instance.graph`` must be the graph the trace was recorded on.
    Contracted vertices delegate into the group of the vertex they were
    merged into; deferred vertices go, in reverse deletion order, to
    their least-loaded sink neighbour (ties by smaller id). Raises
    :class:`LiftFailure` if a deferred vertex cannot be placed within
    ``instance.lam``.
    """
    g = instance.graph
    members = {v: [v] for v in g.vertices}
    contract_target = {}
    deferred = []
    for e in trace.events:
        if isinstance(e, Contract):
            contract_target[e.deleted] = list(members[e.into])
            members[e.into].extend(members.pop(e.deleted))
        elif isinstance(e, Deferred):
            deferred.append(e)
            members.pop(e.v, None)

    def edge_into(v, group):
        group = set(group)
        for w in g.out[v]:
            if w in group and w != v:
                return w
        raise ResDelError(f"no edge from {v} into group {sorted(group)}")

    choice = {}
    for v, w in reduced_sol.choice.items():
        choice[v] = edge_into(v, members[w])

    if deferred:
        surviving = {v for v in members}
        sinks_now = {v for v in surviving if v not in reduced_sol.choice}
        weight_now = {rep: sum(g.weight[x] for x in grp) for rep, grp in members.items()}
        reduced = DelegationGraph(
            _freeze(weight_now),
            frozenset((v, w) for v, w in reduced_sol.choice.items()),
        )
        load = dict(sink_loads(reduced, reduced_sol).load)
        for t in sinks_now:
            load.setdefault(t, weight_now[t])
        for e in reversed(deferred):
            t = min(e.sink_neighbors, key=lambda s: (load[s], s))
            if load[t] + e.weight > instance.lam:
                raise LiftFailure(e.v, t, load[t] + e.weight)
            load[t] += e.weight
            choice[e.v] = edge_into(e.v, members[t])

    for v, grp in contract_target.items():
        choice[v] = edge_into(v, grp)
    return DelegationSolution(choice)
