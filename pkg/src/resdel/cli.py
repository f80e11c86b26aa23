"""Command-line front end. Exit status: 0 yes/feasible, 1 no, 2 error."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import gadgets, io
from .core import Instance, ResDelError, validate
from .driver import ALGORITHMS, decide, optimize_driver
from .fractional import fractional_optimize
from .gen import random_instance
from .reduce import Contract, Deferred, SelfLoopRemoved, rd3_defer, reduce_exhaustively

YES, NO, ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = io.parse_instance(_read(args.file))
    lam = args.lam if args.lam is not None else inst.lam
    inst = Instance(inst.graph, lam)
    res = decide(inst, args.algo)
    text = io.serialize_solution(res.solution)
    if args.stats:
        st = res.stats
        text += f"# nodes_explored {st.nodes_explored}\n# leaf_enumerations {st.leaf_enumerations}\n"
        text += "".join(f"# rule {k} {v}\n" for k, v in sorted(st.rule_applications.items()))
    _emit(text, args.output)
    return YES if res.answer else NO


def cmd_optimize(args) -> int:
    inst = io.parse_instance(_read(args.file))
    found = optimize_driver(inst.graph, args.algo)
    if found is None:
        _emit("s no\n", args.output)
        return NO
    lam, sol = found
    _emit(io.serialize_solution(sol, lam), args.output)
    return YES


def cmd_fractional(args) -> int:
    inst = io.parse_instance(_read(args.file))
    found = fractional_optimize(inst.graph)
    if found is None:
        _emit("s no\n", args.output)
        return NO
    _, sol = found
    _emit(io.serialize_fractional(sol), args.output)
    return YES


def cmd_reduce(args) -> int:
    inst = io.parse_instance(_read(args.file))
    g, trace = reduce_exhaustively(inst.graph)
    if not args.no_defer:
        g, t3 = rd3_defer(g)
        trace = trace + t3
    lines = []
    for e in trace.events:
        if isinstance(e, Contract):
            lines.append(f"# contract {e.deleted} {e.into}")
        elif isinstance(e, SelfLoopRemoved):
            lines.append(f"# selfloop {e.v}")
        elif isinstance(e, Deferred):
            sinks = " ".join(map(str, sorted(e.sink_neighbors)))
            lines.append(f"# defer {e.v} {e.weight} {sinks}")
    new = {v: i for i, v in enumerate(g.vertices, 1)}
    lines += [f"# id {i} {v}" for v, i in new.items()]
    lines.append(f"p rd {len(g)} {len(g.edges)} {inst.lam}")
    lines += [f"w {new[v]} {g.weight[v]}" for v in g.vertices if g.weight[v] != 1]
    lines += [f"e {new[u]} {new[v]}" for u, v in sorted(g.edges)]
    _emit("\n".join(lines) + "\n", args.output)
    return YES


def cmd_verify(args) -> int:
    inst = io.parse_instance(_read(args.file))
    if args.lam is not None:
        inst = Instance(inst.graph, args.lam)
    answer, sol = io.parse_solution(_read(args.solution))
    if not answer:
        print("cannot verify a 'no' answer", file=sys.stderr)
        return ERROR
    problems = validate(inst, sol)
    for v in problems:
        print(f"violation {v.kind} {v.vertex}: {v.message}")
    if not problems:
        print("ok")
    return NO if problems else YES


def cmd_gadget(args) -> int:
    text = _read(args.infile)
    if args.kind == "sat":
        src = gadgets.parse_dimacs(text)
        inst, gmap = gadgets.gadget_from_3b2sat(src)
    elif args.kind == "mmo":
        src = io.parse_mmo(text)
        inst, gmap = gadgets.gadget_from_mmo(src)
    else:
        src = io.parse_tvdp(text)
        inst, gmap = gadgets.gadget_from_tvdp(src)
    gadgets.check_gadget_structure(inst, args.kind, source=src, raise_on_error=True)
    if not args.solve:
        _emit(io.serialize_instance(inst), args.output)
        return YES
    res = decide(inst, args.algo)
    out = io.serialize_solution(res.solution)
    if res.answer:
        if args.kind == "sat":
            g = gadgets.extract_assignment(gmap, res.solution)
            out += "# assignment " + " ".join(str(i if g[i] else -i) for i in sorted(g)) + "\n"
        elif args.kind == "mmo":
            for (u, v), (a, b) in gadgets.extract_orientation(gmap, res.solution).items():
                out += f"# orient {a} {b}\n"
        else:
            cert = gadgets.extract_disjoint_paths(gmap, res.solution)
            out += "# path1 " + " ".join(map(str, cert.p1)) + "\n"
            out += "# path2 " + " ".join(map(str, cert.p2)) + "\n"
    _emit(out, args.output)
    return YES if res.answer else NO


def cmd_gen(args) -> int:
    inst = random_instance(
        args.n,
        args.t,
        edge_prob=Fraction(args.edge_prob),
        allow_cycles=not args.dag,
        lam=args.lam,
        seed=args.seed,
    )
    _emit(io.serialize_instance(inst), args.output)
    return YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resdel", description="Resolve Delegation solvers")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_io(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="instance file, '-' for stdin")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = with_io(sub.add_parser("solve", help="decide an instance"))
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--lambda", dest="lam", type=int, help="override the file's lambda")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = with_io(sub.add_parser("optimize", help="minimise lambda"))
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_optimize)

    p = with_io(sub.add_parser("fractional", help="exact fractional optimum"))
    p.set_defaults(func=cmd_fractional)

    p = with_io(sub.add_parser("reduce", help="print reduced instance and trace"))
    p.add_argument("--no-defer", action="store_true", help="skip the deferral rule")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a solution file")
    p.add_argument("file")
    p.add_argument("--solution", required=True)
    p.add_argument("--lambda", dest="lam", type=int)
    p.set_defaults(func=cmd_verify)

    p = with_io(sub.add_parser("gadget", help="build a hardness gadget"), needs_file=False)
    p.add_argument("kind", choices=("sat", "mmo", "tvdp"))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--solve", action="store_true", help="solve and print the extracted certificate")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_gadget)

    p = with_io(sub.add_parser("gen", help="random instance"), needs_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--edge-prob", default="1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dag", action="store_true")
    p.add_argument("--lambda", dest="lam", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ResDelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
