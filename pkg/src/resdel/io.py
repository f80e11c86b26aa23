"""Line-oriented text formats.

Instance::

    p rd <n> <m> <lambda>
    w <v> <weight>        (optional, default 1)
    e <u> <v>             (exactly m lines)

Vertices are ``1..n``; sinks are implicit. Solution::

    s yes|no
    d <u> <v>             (one per non-sink)

Fractional::

    z <p>/<q>
    f <u> <v> <p>/<q>     (one per edge with nonzero flow)

MMO: ``p mmo <n> <m> <r>`` then ``e <u> <v> <w>``. TVDP:
``p tvdp <n> <m> <s1> <t1> <s2> <t2>`` then ``e <u> <v>``.
Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

from .core import DelegationSolution, GraphError, Instance, ResDelError, build_graph
from .fractional import FractionalSolution, format_rational, parse_rational
from .gadgets.mmo import MmoInstance
from .gadgets.tvdp import TvdpInstance


class ParseError(ResDelError, ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(lineno, fields, count):
    if len(fields) != count:
        raise ParseError(lineno, f"expected {count} fields, got {len(fields)}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {' '.join(fields)!r}") from None


def _header(records, kind, count):
    try:
        lineno, fields = next(records)
    except StopIteration:
        raise ParseError(0, "empty input") from None
    if fields[:2] != ["p", kind]:
        raise ParseError(lineno, f"expected 'p {kind}' header")
    return lineno, _ints(lineno, fields[2:], count)


def parse_instance(text: str) -> Instance:
    records = _records(text)
    lineno, (n, m, lam) = _header(records, "rd", 3)
    if n < 1 or m < 0 or lam < 1:
        raise ParseError(lineno, "need n >= 1, m >= 0, lambda >= 1")
    weight = {v: 1 for v in range(1, n + 1)}
    edges = []
    seen = set()
    for lineno, fields in records:
        tag, rest = fields[0], fields[1:]
        if tag == "w":
            v, w = _ints(lineno, rest, 2)
            if v not in weight:
                raise ParseError(lineno, f"weight for unknown vertex {v}")
            if w < 1:
                raise ParseError(lineno, f"nonpositive weight {w}")
            weight[v] = w
        elif tag == "e":
            u, v = _ints(lineno, rest, 2)
            for x in (u, v):
                if x not in weight:
                    raise ParseError(lineno, f"unknown vertex {x}")
            if (u, v) in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if len(edges) != m:
        raise ParseError(lineno, f"header declares {m} edges, found {len(edges)}")
    return Instance(build_graph(weight.items(), edges), lam)


def serialize_instance(instance: Instance) -> str:
    g = instance.graph
    if g.vertices != tuple(range(1, len(g) + 1)):
        raise GraphError("serialisation needs vertex ids 1..n")
    lines = [f"p rd {len(g)} {len(g.edges)} {instance.lam}"]
    lines += [f"w {v} {g.weight[v]}" for v in g.vertices if g.weight[v] != 1]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> tuple[bool, DelegationSolution]:
    answer = None
    choice = {}
    for lineno, fields in _records(text):
        tag = fields[0]
        if tag == "s":
            if len(fields) != 2 or fields[1] not in ("yes", "no"):
                raise ParseError(lineno, "expected 's yes' or 's no'")
            answer = fields[1] == "yes"
        elif tag == "d":
            u, v = _ints(lineno, fields[1:], 2)
            if u in choice:
                raise ParseError(lineno, f"vertex {u} delegates twice")
            choice[u] = v
        elif tag == "l":
            _ints(lineno, fields[1:], 1)
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if answer is None:
        raise ParseError(0, "missing 's' line")
    return answer, DelegationSolution(choice)


def serialize_solution(sol: DelegationSolution | None, lam: int | None = None) -> str:
    if sol is None:
        return "s no\n"
    lines = ["s yes"]
    if lam is not None:
        lines.append(f"l {lam}")
    lines += [f"d {u} {v}" for u, v in sorted(sol.choice.items())]
    return "\n".join(lines) + "\n"


def serialize_fractional(sol: FractionalSolution) -> str:
    lines = [f"z {format_rational(sol.objective)}"]
    lines += [f"f {u} {v} {format_rational(q)}" for (u, v), q in sorted(sol.flow.items())]
    return "\n".join(lines) + "\n"


def parse_fractional(text: str) -> FractionalSolution:
    z = None
    flow = {}
    for lineno, fields in _records(text):
        try:
            if fields[0] == "z" and len(fields) == 2:
                z = parse_rational(fields[1])
            elif fields[0] == "f" and len(fields) == 4:
                flow[(int(fields[1]), int(fields[2]))] = parse_rational(fields[3])
            else:
                raise ParseError(lineno, f"bad line {' '.join(fields)!r}")
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(lineno, str(exc)) from None
    if z is None:
        raise ParseError(0, "missing 'z' line")
    return FractionalSolution(flow, z)


def parse_mmo(text: str) -> MmoInstance:
    records = _records(text)
    lineno, (n, m, r) = _header(records, "mmo", 3)
    edges = []
    for lineno, fields in records:
        if fields[0] != "e":
            raise ParseError(lineno, f"unknown line type {fields[0]!r}")
        edges.append(tuple(_ints(lineno, fields[1:], 3)))
    if len(edges) != m:
        raise ParseError(lineno, f"header declares {m} edges, found {len(edges)}")
    try:
        return MmoInstance(tuple(range(1, n + 1)), tuple(edges), r)
    except GraphError as exc:
        raise ParseError(lineno, str(exc)) from None


def parse_tvdp(text: str) -> TvdpInstance:
    records = _records(text)
    lineno, (n, m, s1, t1, s2, t2) = _header(records, "tvdp", 6)
    edges = []
    for lineno, fields in records:
        if fields[0] != "e":
            raise ParseError(lineno, f"unknown line type {fields[0]!r}")
        edges.append(tuple(_ints(lineno, fields[1:], 2)))
    if len(edges) != m:
        raise ParseError(lineno, f"header declares {m} edges, found {len(edges)}")
    try:
        return TvdpInstance(tuple(range(1, n + 1)), frozenset(edges), s1, t1, s2, t2)
    except GraphError as exc:
        raise ParseError(lineno, str(exc)) from None
