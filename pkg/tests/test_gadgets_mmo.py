import pytest

from resdel import DelegationSolution, GraphError, decide, is_valid, sink_loads
from resdel.gadgets import (
    MmoInstance,
    check_gadget_structure,
    extract_orientation,
    gadget_from_mmo,
    mmo_brute,
    outdegrees,
)
from resdel.gadgets import mmo


def test_single_edge_layout():
    src = MmoInstance((1, 2), ((1, 2, 2),), 2)
    inst, gmap = gadget_from_mmo(src)
    assert len(inst.graph) == 4
    assert inst.lam == 3
    assert gmap.b == {1: 1, 2: 2}
    assert gmap.chains[(1, 2)] == (3, 4)
    sol = DelegationSolution({3: 1, 4: 3})
    assert sink_loads(inst.graph, sol).load[1] == 3
    assert is_valid(inst, sol)
    assert extract_orientation(gmap, sol) == {(1, 2): (1, 2)}
    assert extract_orientation(gmap, DelegationSolution({3: 2, 4: 3})) == {(1, 2): (2, 1)}


def test_triangle_of_threes_is_no():
    src = MmoInstance((1, 2, 3), ((1, 2, 3), (2, 3, 3), (1, 3, 3)), 2)
    assert mmo_brute(src) is None
    inst, _ = gadget_from_mmo(src)
    assert not decide(inst, "edges").answer


def test_heavy_single_edge_needs_r_five():
    assert mmo_brute(MmoInstance((1, 2), ((1, 2, 5),), 4)) is None
    assert mmo_brute(MmoInstance((1, 2), ((1, 2, 5),), 5)) is not None


def test_structure():
    src = MmoInstance((1, 2), ((1, 2, 3),), 1)
    inst, _ = gadget_from_mmo(src)
    rep = check_gadget_structure(inst, "mmo", source=src)
    assert rep.ok and rep.bipartite and rep.acyclic


@pytest.mark.parametrize(
    "edges",
    [((1, 1, 1),), ((1, 2, 0),), ((1, 2, 1), (2, 1, 1)), ((1, 9, 1),)],
)
def test_validation(edges):
    with pytest.raises(GraphError):
        MmoInstance((1, 2), edges, 1)


def test_forward_and_extraction_agree():
    src = MmoInstance((1, 2, 3, 4), ((1, 2, 1), (2, 3, 2), (3, 4, 3), (1, 4, 1)), 3)
    found = mmo_brute(src)
    inst, gmap = gadget_from_mmo(src)
    assert is_valid(inst, mmo.forward_solution(src, gmap, found))
    res = decide(inst, "nonsink")
    assert res.answer
    orient = extract_orientation(gmap, res.solution)
    assert max(outdegrees(src, orient).values()) <= src.r
