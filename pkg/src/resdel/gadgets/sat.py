"""(3,B2)-SAT gadget: lambda = 3 and in/out-degree at most 3.

Id layout for ``n`` variables and ``m`` clauses::

    a_i     = 4(i-1) + 1      sink for literal  x_i
    abar_i  = 4(i-1) + 2      sink for literal ~x_i
    d_i1    = 4(i-1) + 3      edges to a_i and abar_i
    d_i2    = 4(i-1) + 4      single edge to d_i1
    y_j     = 4n + j          edges to the sinks of its three literals

Setting ``d_i1 -> a_i`` fills ``a_i`` to load 3, which encodes
``x_i = False``; a clause vertex can only land on a true literal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from ..core import BudgetExceeded, DelegationSolution, GraphError, Instance, build_graph


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are triples of nonzero ints; ``-i`` is the negation of ``x_i``."""

    n: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(int(l) for l in c) for c in self.clauses))
        for c in self.clauses:
            if len(c) != 3:
                raise GraphError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise GraphError(f"literal {lit} out of range for {self.n} variables")
        for lit, count in self.occurrences.items():
            if count > 2:
                raise GraphError(f"literal {lit} occurs {count} times (at most 2 allowed)")

    @property
    def occurrences(self) -> Counter:
        return Counter(lit for c in self.clauses for lit in c)

    @property
    def is_strict(self) -> bool:
        """Every literal and its negation occur exactly twice."""
        occ = self.occurrences
        return all(occ[i] == 2 and occ[-i] == 2 for i in range(1, self.n + 1))

    def satisfied_by(self, assignment: dict) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


@dataclass(frozen=True)
class SatMap:
    n: int
    m: int
    literal: dict  # f: literal -> sink id
    d1: dict  # f1: literal -> d_{i,1}
    d2: dict  # f2: literal -> d_{i,2}
    clause: tuple  # y_j ids


def parse_dimacs(text: str) -> CnfFormula:
    n = None
    lits: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("c", "%", "#")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphError(f"line {lineno}: bad problem line {line!r}")
            n = int(parts[2])
            continue
        lits.extend(int(x) for x in line.split())
    if n is None:
        raise GraphError("missing 'p cnf' line")
    clauses, cur = [], []
    for lit in lits:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        clauses.append(tuple(cur))
    return CnfFormula(n, tuple(clauses))


def to_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n} {len(formula.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in formula.clauses]
    return "\n".join(lines) + "\n"


def gadget_from_3b2sat(formula: CnfFormula) -> tuple[Instance, SatMap]:
    n, m = formula.n, len(formula.clauses)
    literal, d1, d2 = {}, {}, {}
    edges = []
    for i in range(1, n + 1):
        base = 4 * (i - 1)
        a, abar, di1, di2 = base + 1, base + 2, base + 3, base + 4
        literal[i], literal[-i] = a, abar
        d1[i] = d1[-i] = di1
        d2[i] = d2[-i] = di2
        edges += [(di2, di1), (di1, a), (di1, abar)]
    clause = tuple(4 * n + j for j in range(1, m + 1))
    for y, c in zip(clause, formula.clauses):
        edges += [(y, literal[l]) for l in c]
    graph = build_graph([(v, 1) for v in range(1, 4 * n + m + 1)], edges)
    return Instance(graph, 3), SatMap(n, m, literal, d1, d2, clause)


def forward_solution(formula: CnfFormula, gmap: SatMap, assignment: dict) -> DelegationSolution:
    choice = {}
    for i in range(1, formula.n + 1):
        choice[gmap.d2[i]] = gmap.d1[i]
        choice[gmap.d1[i]] = gmap.literal[-i] if assignment[i] else gmap.literal[i]
    for y, c in zip(gmap.clause, formula.clauses):
        lit = next(l for l in c if assignment[abs(l)] == (l > 0))
        choice[y] = gmap.literal[lit]
    return DelegationSolution(choice)


def extract_assignment(gmap: SatMap, sol: DelegationSolution) -> dict:
    """``x_i`` is False exactly when ``d_i1`` delegates to ``a_i``."""
    return {i: sol.choice[gmap.d1[i]] != gmap.literal[i] for i in range(1, gmap.n + 1)}


def sat_brute(formula: CnfFormula, max_vars: int = 6) -> dict | None:
    if formula.n > max_vars:
        raise BudgetExceeded(f"{formula.n} variables exceed budget {max_vars}")
    for bits in product((False, True), repeat=formula.n):
        assignment = dict(enumerate(bits, 1))
        if formula.satisfied_by(assignment):
            return assignment
    return None
