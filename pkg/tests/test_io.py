from fractions import Fraction

import pytest

from resdel import DelegationSolution, random_instance
from resdel.fractional import FractionalSolution
from resdel.io import (
    ParseError,
    parse_fractional,
    parse_instance,
    parse_mmo,
    parse_solution,
    parse_tvdp,
    serialize_fractional,
    serialize_instance,
    serialize_solution,
)

CHAIN = "p rd 3 2 3\ne 1 2\ne 2 3\n"


def test_parse_chain(chain):
    inst = parse_instance(CHAIN)
    assert inst.graph == chain
    assert inst.lam == 3


def test_weights_and_comments():
    inst = parse_instance("# header next\np rd 3 2 3\nw 2 5  # heavy\ne 1 2\ne 2 3\n")
    assert inst.graph.weight[2] == 5
    assert serialize_instance(inst).splitlines()[1] == "w 2 5"


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("p rd 3 1 3\ne 1 4\n", 2),
        ("p rd 3 2 3\ne 1 2\ne 1 2\n", 3),
        ("p rd 3 1 3\nw 7 2\ne 1 2\n", 2),
        ("p rd 3 1 3\nw 1 0\ne 1 2\n", 2),
        ("p rd 3 2 3\ne 1 2\n", 2),
        ("p rd 3 1 3\nx 1 2\n", 2),
        ("p rd 3 1\ne 1 2\n", 1),
        ("p cnf 3 1\n", 1),
        ("p rd 3 1 3\ne 1 two\n", 2),
        ("", 0),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.lineno == lineno


def test_round_trip_generated():
    for seed in range(50):
        inst = random_instance(1 + seed % 10, 1, edge_prob="1/2", seed=seed)
        assert parse_instance(serialize_instance(inst)) == inst


def test_solution_round_trip():
    sol = DelegationSolution({1: 2, 2: 3})
    text = serialize_solution(sol, lam=3)
    assert text == "s yes\nl 3\nd 1 2\nd 2 3\n"
    assert parse_solution(text) == (True, sol)
    assert parse_solution(serialize_solution(None)) == (False, DelegationSolution())


def test_solution_rejects_double_delegation():
    with pytest.raises(ParseError):
        parse_solution("s yes\nd 1 2\nd 1 3\n")
    with pytest.raises(ParseError):
        parse_solution("d 1 2\n")


def test_fractional_round_trip():
    sol = FractionalSolution({(1, 2): Fraction(1, 2), (1, 3): Fraction(1, 2)}, Fraction(3, 2))
    text = serialize_fractional(sol)
    assert text.splitlines()[0] == "z 3/2"
    assert parse_fractional(text) == sol
    with pytest.raises(ParseError):
        parse_fractional("z 1/0\n")


def test_mmo_and_tvdp_formats():
    src = parse_mmo("p mmo 2 1 2\ne 1 2 2\n")
    assert src.edges == ((1, 2, 2),) and src.r == 2
    tv = parse_tvdp("p tvdp 4 2 1 2 3 4\ne 1 2\ne 3 4\n")
    assert (tv.s1, tv.t1, tv.s2, tv.t2) == (1, 2, 3, 4)
    with pytest.raises(ParseError):
        parse_mmo("p mmo 2 1 2\ne 1 1 2\n")
    with pytest.raises(ParseError):
        parse_tvdp("p tvdp 4 0 1 2 3 3\n")
