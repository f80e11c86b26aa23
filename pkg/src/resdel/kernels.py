"""Hot loops: sink-load evaluation and exhaustive assignment search.

Vertices are addressed by dense index ``0..n-1``. Two backends exist:

* ``numba``: the loop kernels below compiled with ``@njit``.
* ``numpy``: a vectorised pointer-jumping load pass, and the search
  loop run by the interpreter.

Set ``RESDEL_DISABLE_NUMBA=1`` to force the numpy backend. Both
backends return identical results; the test suite checks this.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("RESDEL_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by RESDEL_DISABLE_NUMBA")
    from numba import njit as _njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _chain_loads_loop(succ, weight, is_sink):
    # succ[v] is the chosen target of non-sink v; ignored for sinks.
    n = succ.shape[0]
    root = np.full(n, -1, np.int64)
    state = np.zeros(n, np.int8)
    stack = np.empty(n, np.int64)
    for s in range(n):
        if state[s] == 2:
            continue
        top = 0
        v = s
        r = -1
        while True:
            if state[v] == 2:
                r = root[v]
                break
            if state[v] == 1:
                return np.zeros(0, np.int64), False
            if is_sink[v]:
                r = v
                state[v] = 2
                root[v] = v
                break
            state[v] = 1
            stack[top] = v
            top += 1
            v = succ[v]
            if v < 0:
                return np.zeros(0, np.int64), False
        for i in range(top):
            root[stack[i]] = r
            state[stack[i]] = 2
    loads = np.zeros(n, np.int64)
    for v in range(n):
        loads[root[v]] += weight[v]
    return loads, True


def _chain_loads_numpy(succ, weight, is_sink):
    n = succ.shape[0]
    idx = np.arange(n, dtype=np.int64)
    nxt = np.where(is_sink, idx, succ).astype(np.int64)
    if n and (nxt < 0).any():
        return np.zeros(0, np.int64), False
    hops = 1
    while hops < n:
        nxt = nxt[nxt]
        hops *= 2
    if n and not is_sink[nxt].all():
        return np.zeros(0, np.int64), False
    loads = np.bincount(nxt, weights=weight, minlength=n).astype(np.int64)
    return loads, True


def _partial_max(succ, weight, is_sink, mark, stack, loads):
    """Largest load already delivered to a sink by a partial assignment.

    ``succ[v] < 0`` marks an unassigned non-sink. Returns -1 if the
    assigned edges close a cycle. Scratch arrays are caller-owned.
    ``mark[u]`` ends as the sink reached (>= 0) or -1 when ``u`` stops
    at an unassigned vertex.
    """
    n = succ.shape[0]
    # -2 unknown, -3 on the current chain.
    for u in range(n):
        mark[u] = u if is_sink[u] else -2
    for s in range(n):
        if mark[s] != -2:
            continue
        top = 0
        u = s
        r = -1
        while True:
            m = mark[u]
            if m == -3:
                return -1
            if m != -2:
                r = m
                break
            if succ[u] < 0:
                mark[u] = -1
                r = -1
                break
            mark[u] = -3
            stack[top] = u
            top += 1
            u = succ[u]
        for i in range(top):
            mark[stack[i]] = r
    for u in range(n):
        loads[u] = 0
    for u in range(n):
        if mark[u] >= 0:
            loads[mark[u]] += weight[u]
    worst = 0
    for u in range(n):
        if loads[u] > worst:
            worst = loads[u]
    return worst


def _make_search(partial_max):
    def search_loop(offsets, targets, weight, is_sink, order, cap, optimize, lower):
        """Depth-first search over one out-edge per non-sink.

        ``order`` lists non-sink indices, most significant first; options
        of ``v`` are ``targets[offsets[v]:offsets[v + 1]]`` in the given
        order. A branch is cut as soon as the chosen prefix closes a
        cycle or delivers more than ``cap`` to some sink, which never
        removes a feasible completion, so the first full assignment
        reached is the lexicographically first feasible one.

        With ``optimize`` set, each hit tightens ``cap`` to its value
        minus one and the search goes on until exhausted or ``lower`` is
        reached. Returns ``(best_value, best_positions)``;
        ``best_value`` is -1 when nothing satisfies the cap.
        """
        n = weight.shape[0]
        k = order.shape[0]
        succ = np.full(n, -1, np.int64)
        pos = np.zeros(k, np.int64)
        best = np.full(k, -1, np.int64)
        best_val = -1
        mark = np.empty(n, np.int64)
        stack = np.empty(n, np.int64)
        loads = np.zeros(n, np.int64)
        depth = 0
        while depth >= 0:
            v = order[depth]
            if offsets[v] + pos[depth] >= offsets[v + 1]:
                succ[v] = -1
                depth -= 1
                if depth >= 0:
                    pos[depth] += 1
                continue
            succ[v] = targets[offsets[v] + pos[depth]]
            worst = partial_max(succ, weight, is_sink, mark, stack, loads)
            if worst < 0 or worst > cap:
                pos[depth] += 1
                continue
            if depth == k - 1:
                best_val = worst
                for i in range(k):
                    best[i] = pos[i]
                if not optimize or worst <= lower:
                    break
                cap = worst - 1
                pos[depth] += 1
                continue
            depth += 1
            pos[depth] = 0
        return best_val, best

    return search_loop


if HAVE_NUMBA:
    chain_loads_numba = _njit(cache=True)(_chain_loads_loop)
    partial_max_numba = _njit(cache=True)(_partial_max)
    search_numba = _njit(_make_search(partial_max_numba))
else:  # pragma: no cover - exercised only without numba
    chain_loads_numba = partial_max_numba = search_numba = None

chain_loads_numpy = _chain_loads_numpy
partial_max_python = _partial_max
search_python = _make_search(_partial_max)


def chain_loads(succ, weight, is_sink):
    """Per-vertex load array (nonzero only at sinks) and a success flag.

    The flag is False when some non-sink's chosen chain is cyclic or
    hits an unassigned (negative) successor.
    """
    if HAVE_NUMBA:
        return chain_loads_numba(succ, weight, is_sink)
    return chain_loads_numpy(succ, weight, is_sink)


def partial_max(succ, weight, is_sink):
    """Max load forced by a partial assignment (-1 on a cycle) and the reach marks."""
    n = succ.shape[0]
    mark = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    loads = np.zeros(n, np.int64)
    fn = partial_max_numba if HAVE_NUMBA else partial_max_python
    return int(fn(succ, weight, is_sink, mark, stack, loads)), mark


def search(offsets, targets, weight, is_sink, order, cap, optimize=False, lower=0):
    args = (offsets, targets, weight, is_sink, order, np.int64(cap), bool(optimize), np.int64(lower))
    if HAVE_NUMBA:
        val, best = search_numba(*args)
    else:
        val, best = search_python(*args)
    return int(val), best
