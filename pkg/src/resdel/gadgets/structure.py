"""Structural checks on generated gadget instances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..core import DelegationGraph, Instance, ResDelError


class StructureError(ResDelError):
    """A generated gadget lacks a property its construction guarantees."""


@dataclass
class StructureReport:
    kind: str
    n_vertices: int
    n_sinks: int
    lam: int
    bipartite: bool
    acyclic: bool
    max_in: int
    max_out: int
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def is_bipartite(g: DelegationGraph) -> bool:
    side = {}
    nbrs = {v: set(g.out[v]) | set(g.inn[v]) for v in g.vertices}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_acyclic(g: DelegationGraph) -> bool:
    indeg = {v: len(g.inn[v]) for v in g.vertices}
    queue = deque(v for v, d in indeg.items() if d == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for w in g.out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(g)


def check_gadget_structure(instance: Instance, kind: str, *, source=None, raise_on_error=False) -> StructureReport:
    """Check the properties a gadget of ``kind`` (``sat``, ``mmo``, ``tvdp``) must have.

    ``source`` (the formula / MMO instance / TVDP instance) enables the
    size checks that depend on it.
    """
    g = instance.graph
    rep = StructureReport(
        kind=kind,
        n_vertices=len(g),
        n_sinks=len(g.sinks),
        lam=instance.lam,
        bipartite=is_bipartite(g),
        acyclic=is_acyclic(g),
        max_in=max((len(x) for x in g.inn.values()), default=0),
        max_out=max((len(x) for x in g.out.values()), default=0),
    )
    p = rep.problems
    if kind == "sat":
        if not rep.bipartite:
            p.append("not bipartite")
        if not rep.acyclic:
            p.append("not acyclic")
        if rep.max_in > 3 or rep.max_out > 3:
            p.append(f"degree bound exceeded (in {rep.max_in}, out {rep.max_out})")
        if rep.lam != 3:
            p.append(f"lambda {rep.lam} != 3")
        if source is not None and rep.n_vertices != 4 * source.n + len(source.clauses):
            p.append("vertex count != 4n + m")
    elif kind == "mmo":
        if not rep.bipartite:
            p.append("not bipartite")
        if not rep.acyclic:
            p.append("not acyclic")
        if source is not None:
            want = len(source.vertices) + sum(w for _, _, w in source.edges)
            if rep.n_vertices != want:
                p.append(f"vertex count {rep.n_vertices} != {want}")
            if rep.lam != source.r + 1:
                p.append(f"lambda {rep.lam} != r + 1")
    elif kind == "tvdp":
        if rep.n_sinks != 3:
            p.append(f"{rep.n_sinks} sinks, expected 3")
        if rep.n_vertices % 46:
            p.append(f"vertex count {rep.n_vertices} is not a multiple of 46")
        elif rep.lam != 17 * (rep.n_vertices // 46):
            p.append(f"lambda {rep.lam} != 17n")
    else:
        raise ValueError(f"unknown gadget kind {kind!r}")
    if raise_on_error and p:
        raise StructureError(f"{kind} gadget: " + "; ".join(p))
    return rep
