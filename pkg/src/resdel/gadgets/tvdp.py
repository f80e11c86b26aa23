"""Two-vertex-disjoint-paths gadget with exactly three sinks.

Id layout for a source graph on ``n`` vertices (sorted source ids map
to ``a`` vertices in order), all blocks being directed chains in
increasing id order::

    a_v       1 .. n
    D1        n+1   .. 11n   (10n)   end d1 = 11n
    D1'       11n+1 .. 16n   (5n)    start d1' = 11n+1, end t1' = 16n
    D2        16n+1 .. 21n   (5n)    end d2 = 21n
    D2'       21n+1 .. 31n   (10n)   start d2' = 21n+1, end t2' = 31n
    D3        31n+1 .. 46n   (15n)   end t3' = 46n

Connectors: ``d1 -> a_s1``, ``d2 -> a_s2``, ``a_t1 -> d1'``,
``a_t2 -> d2'`` and ``a_v -> t3'`` for every ``v``; lambda is ``17n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from ..core import BudgetExceeded, DelegationSolution, GraphError, Instance, ResDelError, build_graph


class PathTraceError(ResDelError):
    """Chosen delegations do not trace a path between the expected terminals."""


@dataclass(frozen=True)
class TvdpInstance:
    vertices: tuple
    edges: frozenset
    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", frozenset((int(u), int(v)) for u, v in self.edges))
        terms = (self.s1, self.t1, self.s2, self.t2)
        if len(set(terms)) != 4:
            raise GraphError(f"terminals must be distinct, got {terms}")
        vs = set(self.vertices)
        for x in chain(terms, *self.edges):
            if x not in vs:
                raise GraphError(f"unknown vertex {x}")

    @property
    def succ(self) -> dict:
        out = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            if u != v:
                out[u].append(v)
        return out


@dataclass(frozen=True)
class DisjointPathsCertificate:
    p1: tuple
    p2: tuple


@dataclass(frozen=True)
class TvdpMap:
    a: dict  # source vertex -> gadget id
    blocks: dict  # block name -> tuple of ids in chain order
    d1: int
    d2: int
    d1p: int
    d2p: int
    t1p: int
    t2p: int
    t3p: int
    terminals: tuple  # (s1, t1, s2, t2) in source ids


def check_certificate(src: TvdpInstance, cert: DisjointPathsCertificate) -> bool:
    def is_path(p, s, t):
        return (
            len(p) >= 2
            and p[0] == s
            and p[-1] == t
            and len(set(p)) == len(p)
            and all((u, v) in src.edges for u, v in zip(p, p[1:]))
        )

    return (
        is_path(cert.p1, src.s1, src.t1)
        and is_path(cert.p2, src.s2, src.t2)
        and not set(cert.p1) & set(cert.p2)
    )


def gadget_from_tvdp(src: TvdpInstance) -> tuple[Instance, TvdpMap]:
    n = len(src.vertices)
    a = {v: i + 1 for i, v in enumerate(src.vertices)}
    sizes = (("D1", 10 * n), ("D1p", 5 * n), ("D2", 5 * n), ("D2p", 10 * n), ("D3", 15 * n))
    blocks = {}
    nxt = n + 1
    for name, size in sizes:
        blocks[name] = tuple(range(nxt, nxt + size))
        nxt += size
    gmap = TvdpMap(
        a=a,
        blocks=blocks,
        d1=blocks["D1"][-1],
        d2=blocks["D2"][-1],
        d1p=blocks["D1p"][0],
        d2p=blocks["D2p"][0],
        t1p=blocks["D1p"][-1],
        t2p=blocks["D2p"][-1],
        t3p=blocks["D3"][-1],
        terminals=(src.s1, src.t1, src.s2, src.t2),
    )
    edges = [(a[u], a[v]) for u, v in src.edges if u != v]
    for ids in blocks.values():
        edges.extend(zip(ids, ids[1:]))
    edges += [
        (gmap.d1, a[src.s1]),
        (gmap.d2, a[src.s2]),
        (a[src.t1], gmap.d1p),
        (a[src.t2], gmap.d2p),
    ]
    edges.extend((a[v], gmap.t3p) for v in src.vertices)
    graph = build_graph([(v, 1) for v in range(1, nxt)], edges)
    return Instance(graph, 17 * n), gmap


def forward_solution(src: TvdpInstance, gmap: TvdpMap, cert: DisjointPathsCertificate) -> DelegationSolution:
    """Gadget witness built from a pair of disjoint source paths."""
    choice = {}
    for ids in gmap.blocks.values():
        choice.update(zip(ids, ids[1:]))
    choice[gmap.d1] = gmap.a[src.s1]
    choice[gmap.d2] = gmap.a[src.s2]
    for p in (cert.p1, cert.p2):
        for u, v in zip(p, p[1:]):
            choice[gmap.a[u]] = gmap.a[v]
    choice[gmap.a[src.t1]] = gmap.d1p
    choice[gmap.a[src.t2]] = gmap.d2p
    for v in src.vertices:
        choice.setdefault(gmap.a[v], gmap.t3p)
    return DelegationSolution(choice)


def extract_disjoint_paths(gmap: TvdpMap, sol: DelegationSolution) -> DisjointPathsCertificate:
    """Follow chosen edges from ``a_s1`` and ``a_s2`` and map back to source ids.

    Each traced path must end at ``a_ti`` delegating into its block
    connector, as every valid gadget solution does.
    """
    s1, t1, s2, t2 = gmap.terminals
    back = {g: v for v, g in gmap.a.items()}

    def trace(s, t, exit_to):
        path = [s]
        cur = gmap.a[s]
        while back.get(cur) != t:
            cur = sol.choice.get(cur)
            if cur not in back or back[cur] in path:
                raise PathTraceError(f"chosen edges from a_{s} do not reach a_{t}")
            path.append(back[cur])
        if sol.choice.get(cur) != exit_to:
            raise PathTraceError(f"a_{t} does not delegate to its block connector {exit_to}")
        return tuple(path)

    return DisjointPathsCertificate(trace(s1, t1, gmap.d1p), trace(s2, t2, gmap.d2p))


def _simple_paths(succ, s, t, avoid=frozenset()):
    stack = [(s, (s,))]
    while stack:
        v, path = stack.pop()
        if v == t:
            yield path
            continue
        for w in reversed(succ[v]):
            if w not in path and w not in avoid:
                stack.append((w, path + (w,)))


def tvdp_brute(src: TvdpInstance, max_vertices: int = 8) -> DisjointPathsCertificate | None:
    if len(src.vertices) > max_vertices:
        raise BudgetExceeded(f"{len(src.vertices)} vertices exceed budget {max_vertices}")
    succ = src.succ
    for p1 in _simple_paths(succ, src.s1, src.t1, frozenset((src.s2, src.t2))):
        for p2 in _simple_paths(succ, src.s2, src.t2, frozenset(p1)):
            return DisjointPathsCertificate(p1, p2)
    return None
