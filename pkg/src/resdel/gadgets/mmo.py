"""Minimum-maximum-outdegree gadget.

Every source vertex ``u`` becomes a sink ``b_u``; every weighted edge
``(u, v)`` becomes a chain ``a_w -> ... -> a_1`` of ``w`` vertices whose
head ``a_1`` points to both ``b_u`` and ``b_v``. A chain landing on
``b_u`` adds ``w`` to its load, so ``load(b_u) = 1 + d+(u)`` and the cap
is ``r + 1``.

Id layout: ``b`` vertices take ``1..|V|`` in sorted source-id order;
edges follow in input order, each edge's chain taking the next ``w``
ids as ``a_1, a_2, ..., a_w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..core import BudgetExceeded, DelegationSolution, GraphError, Instance, build_graph


@dataclass(frozen=True)
class MmoInstance:
    vertices: tuple
    edges: tuple  # ((u, v, w), ...) undirected, positive weights
    r: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(w)) for u, v, w in self.edges))
        vs = set(self.vertices)
        seen = set()
        for u, v, w in self.edges:
            if u not in vs or v not in vs:
                raise GraphError(f"edge ({u}, {v}) has an unknown endpoint")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if w < 1:
                raise GraphError(f"edge ({u}, {v}) has nonpositive weight {w}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"parallel edge ({u}, {v})")
            seen.add(key)
        if self.r < 1:
            raise GraphError(f"r must be positive, got {self.r}")


@dataclass(frozen=True)
class MmoMap:
    b: dict  # source vertex -> sink id
    chains: dict  # (u, v) -> ids (a_1, ..., a_w)


def outdegrees(src: MmoInstance, orientation: dict) -> dict:
    """Weighted out-degree per vertex; ``orientation`` maps ``(u, v)`` to an ordered pair."""
    d = {v: 0 for v in src.vertices}
    for u, v, w in src.edges:
        tail, _ = orientation[(u, v)]
        d[tail] += w
    return d


def gadget_from_mmo(src: MmoInstance) -> tuple[Instance, MmoMap]:
    b = {u: i + 1 for i, u in enumerate(src.vertices)}
    chains = {}
    edges = []
    nxt = len(b) + 1
    for u, v, w in src.edges:
        ids = tuple(range(nxt, nxt + w))
        nxt += w
        chains[(u, v)] = ids
        edges += [(ids[0], b[u]), (ids[0], b[v])]
        edges += [(ids[i], ids[i - 1]) for i in range(1, w)]
    graph = build_graph([(x, 1) for x in range(1, nxt)], edges)
    return Instance(graph, src.r + 1), MmoMap(b, chains)


def forward_solution(src: MmoInstance, gmap: MmoMap, orientation: dict) -> DelegationSolution:
    choice = {}
    for (u, v), ids in gmap.chains.items():
        choice.update((ids[i], ids[i - 1]) for i in range(1, len(ids)))
        tail, _ = orientation[(u, v)]
        choice[ids[0]] = gmap.b[tail]
    return DelegationSolution(choice)


def extract_orientation(gmap: MmoMap, sol: DelegationSolution) -> dict:
    """Orient ``(u, v)`` out of ``u`` when ``a_1`` delegates to ``b_u``, else out of ``v``."""
    return {
        (u, v): (u, v) if sol.choice[ids[0]] == gmap.b[u] else (v, u)
        for (u, v), ids in gmap.chains.items()
    }


def mmo_brute(src: MmoInstance, max_edges: int = 12) -> dict | None:
    if len(src.edges) > max_edges:
        raise BudgetExceeded(f"{len(src.edges)} edges exceed budget {max_edges}")
    for flips in product((False, True), repeat=len(src.edges)):
        orientation = {
            (u, v): (v, u) if flip else (u, v) for (u, v, _), flip in zip(src.edges, flips)
        }
        if max(outdegrees(src, orientation).values(), default=0) <= src.r:
            return orientation
    return None
