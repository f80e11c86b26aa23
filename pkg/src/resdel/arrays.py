"""Dense-index views of a :class:`DelegationGraph` for the kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DelegationGraph, DelegationSolution


@dataclass
class GraphArrays:
    ids: np.ndarray  # dense index -> vertex id (sorted)
    index: dict
    weight: np.ndarray
    is_sink: np.ndarray
    offsets: np.ndarray  # CSR over out-neighbours sorted by id, self-loops dropped
    targets: np.ndarray
    order: np.ndarray  # non-sink indices in id order

    @classmethod
    def from_graph(cls, graph: DelegationGraph) -> GraphArrays:
        ids = np.array(graph.vertices, dtype=np.int64)
        index = {int(v): i for i, v in enumerate(graph.vertices)}
        weight = np.array([graph.weight[v] for v in graph.vertices], dtype=np.int64)
        offsets = np.zeros(len(ids) + 1, dtype=np.int64)
        targets = []
        for i, v in enumerate(graph.vertices):
            nbrs = [index[w] for w in graph.out[v] if w != v]
            targets.extend(nbrs)
            offsets[i + 1] = offsets[i] + len(nbrs)
        targets = np.array(targets, dtype=np.int64)
        is_sink = offsets[1:] == offsets[:-1]
        order = np.flatnonzero(~is_sink).astype(np.int64)
        return cls(ids, index, weight, is_sink, offsets, targets, order)

    def search(self, cap: int, optimize: bool = False, lower: int = 0):
        """Run the assignment search; returns ``(value, solution)`` or ``(-1, None)``."""
        if len(self.order) == 0:
            loads = self.weight
            worst = int(loads.max(initial=0))
            return (worst, DelegationSolution({})) if worst <= cap else (-1, None)
        val, pos = kernels.search(
            self.offsets, self.targets, self.weight, self.is_sink, self.order, cap, optimize, lower
        )
        if val < 0:
            return -1, None
        choice = {}
        for d, v in enumerate(self.order):
            choice[int(self.ids[v])] = int(self.ids[self.targets[self.offsets[v] + pos[d]]])
        return val, DelegationSolution(choice)

    def loads_of(self, choice) -> np.ndarray | None:
        """Per-vertex loads for a complete choice map, or None if it does not resolve."""
        succ = np.full(len(self.ids), -1, dtype=np.int64)
        for v, w in choice.items():
            succ[self.index[v]] = self.index[w]
        loads, ok = kernels.chain_loads(succ, self.weight, self.is_sink)
        return loads if ok else None
