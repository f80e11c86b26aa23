import pytest

from resdel import (
    BudgetExceeded,
    Instance,
    brute_force_decide,
    edge_parameter,
    is_valid,
    random_instance,
    solve_edges,
    unit_graph,
)


def test_edge_parameter_examples(chain, fork, two_cycle_with_exit):
    assert edge_parameter(fork) == 1
    assert edge_parameter(chain) == 0
    assert edge_parameter(two_cycle_with_exit) == 1


def test_edge_parameter_ignores_loops():
    assert edge_parameter(unit_graph(2, [(1, 1), (1, 2)])) == 0


def test_fork_two_leaves(fork):
    res = solve_edges(Instance(fork, 2))
    assert res.answer
    assert is_valid(Instance(fork, 2), res.solution)
    assert res.stats.nodes_explored <= 3


def test_chain_single_node(chain):
    res = solve_edges(Instance(chain, 3))
    assert res.answer
    assert res.stats.nodes_explored == 1


def test_sinkless_cycle_is_no(sinkless_cycle):
    assert edge_parameter(sinkless_cycle) == 0
    assert not solve_edges(Instance(sinkless_cycle, 2))


def test_two_cycle_without_room(two_cycle_with_exit):
    assert not solve_edges(Instance(two_cycle_with_exit, 2))
    assert solve_edges(Instance(two_cycle_with_exit, 3))


def test_budget_exceeded():
    inst = random_instance(9, 2, edge_prob="1/2", seed=2, lam=9)
    with pytest.raises(BudgetExceeded):
        solve_edges(inst, node_budget=0)


@pytest.mark.parametrize("dag", [False, True])
def test_matches_oracle_within_node_bound(dag):
    for seed in range(300):
        inst = random_instance(2 + seed % 9, 1 + seed % 3 if seed % 9 >= 2 else 1, edge_prob="1/3", allow_cycles=not dag, seed=seed)
        k = edge_parameter(inst.graph)
        res = solve_edges(inst)
        ref = brute_force_decide(inst)
        assert res.answer == (ref is not None), seed
        assert res.stats.nodes_explored <= 2 ** (k + 1) - 1, seed
        if res.answer:
            assert is_valid(inst, res.solution)
