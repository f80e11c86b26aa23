from fractions import Fraction

import pytest

from resdel import (
    brute_force_optimize,
    build_graph,
    fractional_feasible,
    fractional_optimize,
    random_instance,
    unit_graph,
)
from resdel.fractional import format_rational, parse_rational


def residuals(graph, sol):
    """Per-vertex imbalance: non-sinks must be 0, sinks report their load."""
    inflow = {v: Fraction(0) for v in graph.vertices}
    outflow = {v: Fraction(0) for v in graph.vertices}
    for (u, v), f in sol.flow.items():
        assert f > 0
        assert (u, v) in graph.edges
        outflow[u] += f
        inflow[v] += f
    return {v: graph.weight[v] + inflow[v] - outflow[v] for v in graph.vertices}


def test_fork_split(fork):
    sol = fractional_feasible(fork, Fraction(3, 2))
    assert sol.flow == {(1, 2): Fraction(1, 2), (1, 3): Fraction(1, 2)}


def test_fork_infeasible_below(fork):
    assert fractional_feasible(fork, Fraction(4, 3)) is None


def test_chain_forced(chain):
    sol = fractional_feasible(chain, 3)
    assert sol.flow == {(1, 2): 1, (2, 3): 2}


@pytest.mark.parametrize(
    "edges, n, expected",
    [
        ([(1, 2), (1, 3)], 3, Fraction(3, 2)),
        ([(1, 2), (2, 3)], 3, Fraction(3)),
        ([(1, 3), (1, 4), (2, 3), (2, 4)], 4, Fraction(2)),
    ],
)
def test_optimum_examples(edges, n, expected):
    z, _ = fractional_optimize(unit_graph(n, edges))
    assert z == expected


def test_sinkless_cycle_infeasible(sinkless_cycle):
    assert fractional_optimize(sinkless_cycle) is None


def test_unreachable_sink_infeasible():
    g = unit_graph(3, [(1, 2), (2, 1), (3, 3)])
    assert fractional_optimize(g) is None


def test_heavy_sink_sets_the_optimum():
    g = build_graph([(1, 1), (2, 5), (3, 1)], [(1, 2), (1, 3)])
    z, sol = fractional_optimize(g)
    assert z == 5
    assert residuals(g, sol)[3] == 2


def test_rational_text_round_trip():
    for q in (Fraction(3, 2), Fraction(7), Fraction(0)):
        assert format_rational(q).count("/") == 1
        assert parse_rational(format_rational(q)) == q


def test_relaxation_bounds_integral_optimum():
    for seed in range(80):
        inst = random_instance(2 + seed % 8, 1 + seed % 3 if seed % 8 >= 2 else 1, edge_prob="1/2", seed=seed)
        g = inst.graph
        frac = fractional_optimize(g)
        integral = brute_force_optimize(g)
        assert (frac is None) == (integral is None)
        if frac is None:
            continue
        z, sol = frac
        assert z <= integral[0]
        assert z.denominator <= len(g.sinks)
        res = residuals(g, sol)
        assert all(res[v] == 0 for v in g.nonsinks)
        assert max(res[t] for t in g.sinks) <= z
        if z > Fraction(g.total_weight, len(g.sinks)):
            assert fractional_feasible(g, z - Fraction(1, len(g.sinks) ** 2)) is None
