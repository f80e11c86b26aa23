"""Seeded random delegation instances.

The stream is numpy's ``PCG64`` seeded with the given 64-bit seed, and
draws happen in a fixed order:

1. ``permutation(n)`` fixes the vertex order; ids are ``perm + 1``.
   The last ``t`` vertices in that order are the sinks.
2. For each non-sink in order and each candidate target in order (all
   other vertices, or only later ones in DAG mode), one ``uint64`` is
   drawn; the edge exists iff it is below ``edge_prob * 2**64``
   (exact rational comparison).
3. A non-sink left without out-edges gets one to a uniformly drawn
   candidate.
4. With ``lam=None`` lambda is drawn uniformly from ``[1, n]``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import Instance, unit_graph


def random_instance(
    n: int,
    t: int,
    edge_prob=Fraction(1, 2),
    allow_cycles: bool = True,
    lam: int | None = None,
    seed: int = 0,
) -> Instance:
    if n < 1 or not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    p = Fraction(edge_prob)
    if not 0 <= p <= 1:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if lam is not None and lam < 1:
        raise ValueError(f"lambda must be at least 1, got {lam}")
    rng = np.random.Generator(np.random.PCG64(seed % 2**64))
    threshold = p * 2**64
    order = [int(x) + 1 for x in rng.permutation(n)]
    non_sinks = order[: n - t]
    edges = []
    for pos, u in enumerate(non_sinks):
        cands = order[pos + 1 :] if not allow_cycles else [v for v in order if v != u]
        mine = []
        for v in cands:
            if int(rng.integers(0, 2**64, dtype=np.uint64)) < threshold:
                mine.append((u, v))
        if not mine:
            mine.append((u, cands[int(rng.integers(0, len(cands)))]))
        edges += mine
    if lam is None:
        lam = int(rng.integers(1, n + 1))
    return Instance(unit_graph(n, edges), lam)
