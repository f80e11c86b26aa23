"""Delegation graphs, instances, solutions, sink loads and validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple


class ResDelError(Exception):
    """Base class for errors raised by this package."""


class GraphError(ResDelError, ValueError):
    """Malformed graph input (unknown endpoint, bad weight, duplicate id)."""


class CycleError(ResDelError):
    """Chosen delegations contain a cycle, so some vote reaches no sink."""

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} does not reach a sink")
        self.vertex = vertex


class BudgetExceeded(ResDelError):
    """A solver or oracle exceeded its configured search budget."""


@dataclass(frozen=True, eq=False)
class DelegationGraph:
    """Directed graph with positive integer vertex weights.

    Sinks are derived: every vertex with no out-edge is a sink. The
    edge set may contain self-loops only in raw input; the reduction
    module strips them.
    """

    weight: Mapping[int, int]
    edges: frozenset

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.weight))

    @cached_property
    def out(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.weight}
        for u, v in self.edges:
            adj[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    @cached_property
    def inn(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.weight}
        for u, v in self.edges:
            adj[v].append(u)
        return {v: tuple(sorted(us)) for v, us in adj.items()}

    @cached_property
    def sinks(self) -> frozenset:
        return frozenset(v for v, ws in self.out.items() if not ws)

    @cached_property
    def nonsinks(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.out[v])

    @property
    def total_weight(self) -> int:
        return sum(self.weight.values())

    def __len__(self):
        return len(self.weight)

    def __eq__(self, other):
        if not isinstance(other, DelegationGraph):
            return NotImplemented
        return dict(self.weight) == dict(other.weight) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.weight.items()), self.edges))

    def __repr__(self):
        return f"DelegationGraph(n={len(self)}, m={len(self.edges)}, sinks={sorted(self.sinks)})"

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> DelegationGraph:
        """Same vertices and weights, new edge set (endpoints not rechecked)."""
        return DelegationGraph(self.weight, frozenset(edges))


def _freeze(weights: Mapping[int, int]) -> Mapping[int, int]:
    return MappingProxyType(dict(weights))


def build_graph(vertex_weights, edges) -> DelegationGraph:
    """Build a graph from ``(id, weight)`` pairs and ``(u, v)`` edges.

    Duplicate edges collapse into one. Raises :class:`GraphError` on a
    duplicate vertex id, a nonpositive weight or id, or an edge whose
    endpoint is not a listed vertex.
    """
    weight: dict[int, int] = {}
    for v, w in vertex_weights:
        if v in weight:
            raise GraphError(f"duplicate vertex id {v}")
        if int(v) < 1:
            raise GraphError(f"vertex id must be positive, got {v}")
        if int(w) < 1:
            raise GraphError(f"vertex {v} has nonpositive weight {w}")
        weight[int(v)] = int(w)
    edge_set = set()
    for u, v in edges:
        for x in (u, v):
            if x not in weight:
                raise GraphError(f"edge ({u}, {v}) has unknown endpoint {x}")
        edge_set.add((int(u), int(v)))
    return DelegationGraph(_freeze(weight), frozenset(edge_set))


def unit_graph(n: int, edges) -> DelegationGraph:
    """Unit-weight graph on vertices ``1..n``."""
    return build_graph([(v, 1) for v in range(1, n + 1)], edges)


@dataclass(frozen=True)
class Instance:
    graph: DelegationGraph
    lam: int

    def __post_init__(self):
        if int(self.lam) < 1:
            raise GraphError(f"lambda must be at least 1, got {self.lam}")


@dataclass(frozen=True)
class DelegationSolution:
    """One chosen out-neighbour per non-sink vertex."""

    choice: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "choice", _freeze(self.choice))

    def __eq__(self, other):
        if not isinstance(other, DelegationSolution):
            return NotImplemented
        return dict(self.choice) == dict(other.choice)

    def __hash__(self):
        return hash(frozenset(self.choice.items()))

    def __repr__(self):
        return f"DelegationSolution({dict(sorted(self.choice.items()))})"


@dataclass(frozen=True)
class SinkLoadReport:
    load: Mapping[int, int]
    max_load: int


class Violation(NamedTuple):
    kind: str
    vertex: int
    message: str


def sink_loads(graph: DelegationGraph, sol: DelegationSolution) -> SinkLoadReport:
    """Accumulate vertex weights along chosen edges down to the sinks.

    Raises :class:`CycleError` if some non-sink never reaches a sink.
    """
    choice = sol.choice
    sinks = graph.sinks
    root: dict[int, int] = {t: t for t in sinks}
    for start in graph.vertices:
        if start in root:
            continue
        path = []
        seen = set()
        v = start
        while v not in root:
            if v in seen or v not in choice:
                raise CycleError(start)
            seen.add(v)
            path.append(v)
            v = choice[v]
        for u in path:
            root[u] = root[v]
    load = {t: 0 for t in sinks}
    for v, r in root.items():
        load[r] += graph.weight[v]
    return SinkLoadReport(_freeze(load), max(load.values(), default=0))


def validate(instance: Instance, sol: DelegationSolution) -> list[Violation]:
    """Return every violated condition; an empty list means accepted."""
    g = instance.graph
    out: list[Violation] = []
    for v, w in sorted(sol.choice.items()):
        if v not in g.weight:
            out.append(Violation("unknown-vertex", v, f"vertex {v} is not in the graph"))
        elif v in g.sinks:
            out.append(Violation("sink-delegates", v, f"sink {v} must not delegate"))
        elif (v, w) not in g.edges:
            out.append(Violation("non-edge", v, f"({v}, {w}) is not an edge"))
        elif v == w:
            out.append(Violation("self-loop", v, f"vertex {v} delegates to itself"))
    for v in g.nonsinks:
        if v not in sol.choice:
            out.append(Violation("uncovered", v, f"non-sink {v} has no delegation"))
    if out:
        return out
    try:
        report = sink_loads(g, sol)
    except CycleError as exc:
        return [Violation("cycle", exc.vertex, str(exc))]
    for t, load in sorted(report.load.items()):
        if load > instance.lam:
            out.append(Violation("overload", t, f"sink {t} load {load} > {instance.lam}"))
    return out


def is_valid(instance: Instance, sol: DelegationSolution) -> bool:
    return not validate(instance, sol)
