"""Command-line interface: ``sigcolor {poly,count,circuits,verify,minimize,switch}``."""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence, TextIO

from .circuits import (
    NbcExpansion,
    broken_circuits,
    check_order,
    enumerate_barbells,
    enumerate_cycles,
    nbc_census,
    quasi_polynomial_from_census,
)
from .counting import (
    ListAssignment,
    ListFormatError,
    brute_count_k,
    brute_count_list,
    inclusion_exclusion_count,
    parse_lists,
)
from .extremal import MODES, minimize_over_assignments
from .graph import GraphParseError, ResourceCapError, SignedGraph, bits, parse_graph, switch_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sigcolor", description="Exact coloring counts for signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="NBC census and the odd/even chromatic polynomials")
    p.add_argument("graph")
    p.add_argument("--order", type=_int_list)

    p = sub.add_parser("count", help="count proper colorings")
    p.add_argument("graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-k", type=int)
    src.add_argument("--list", dest="list_file")
    p.add_argument("--method", choices=("brute", "ie", "nbc"), default="nbc")
    p.add_argument("--order", type=_int_list)

    p = sub.add_parser("circuits", help="cycles, barbells and broken circuits")
    p.add_argument("graph")
    p.add_argument("--order", type=_int_list)

    p = sub.add_parser("verify", help="cross-check every counting method")
    p.add_argument("graph")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("minimize", help="search k-assignments for the fewest colorings")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--universe", type=int)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true")
    how.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("switch", help="switch the graph at a vertex set")
    p.add_argument("graph")
    p.add_argument("--at", type=_int_list, required=True)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _order(g: SignedGraph, order):
    try:
        return check_order(order, g.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _join(xs) -> str:
    return " ".join(str(x) for x in xs)


def _cmd_poly(g, args, out):
    census = nbc_census(g, _order(g, args.order))
    qp = quasi_polynomial_from_census(g.n, census)
    c_star = census.c_star if g.n else (1,)
    out.write(f"c: {_join(census.c)}\nc*: {_join(c_star)}\n")
    out.write(f"P1: {_join(qp.odd)}\nP0: {_join(qp.even)}\n")
    return EXIT_OK


def _cmd_count(g, args, out):
    if args.k is not None:
        if args.k < 0:
            raise UsageError("-k must be non-negative")
        if args.method == "brute":
            out.write(f"{brute_count_k(g, args.k)}\n")
            return EXIT_OK
        if args.k == 0:
            out.write(f"{1 if g.n == 0 else 0}\n")
            return EXIT_OK
        L = ListAssignment.uniform(g.n, args.k)
    else:
        L = parse_lists(_read(args.list_file), g.n)
    if args.method == "brute":
        value = brute_count_list(g, L)
    elif args.method == "ie":
        value = inclusion_exclusion_count(g, L)
    else:
        value = NbcExpansion.build(g, _order(g, args.order)).count(L)
    out.write(f"{value}\n")
    return EXIT_OK


def _edge_str(mask: int) -> str:
    return ",".join(str(e) for e in bits(mask)) or "-"


def _cmd_circuits(g, args, out):
    order = _order(g, args.order)
    cycles = enumerate_cycles(g)
    barbells = enumerate_barbells(g, cycles=cycles)
    family = broken_circuits(g, order)
    out.write(f"cycles: {len(cycles)}\n")
    for c in cycles:
        out.write(f"  {_edge_str(c.edges)} {'balanced' if c.balanced else 'unbalanced'}\n")
    out.write(f"barbells: {len(barbells)}\n")
    for b in barbells:
        out.write(
            f"  {_edge_str(b.edges)} cycles={_edge_str(b.cycle1.edges)}|{_edge_str(b.cycle2.edges)}"
            f" path={_edge_str(b.path)}\n"
        )
    out.write(f"broken circuits: {len(family.multiplicity)}\n")
    for mask in family.distinct:
        out.write(f"  {_edge_str(mask)} x{family.multiplicity[mask]}\n")
    out.write(f"minimal broken circuits: {len(family.minimal)}\n")
    for mask in family.minimal:
        out.write(f"  {_edge_str(mask)}\n")
    return EXIT_OK


def _random_lists(n: int, rng: random.Random) -> ListAssignment:
    return ListAssignment(
        tuple(frozenset(rng.sample(range(-5, 6), rng.randint(1, 4))) for _ in range(n))
    )


def _cmd_verify(g, args, out):
    rng = random.Random(args.seed)
    failures = 0

    def report(name, ok):
        nonlocal failures
        failures += not ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")

    census = nbc_census(g)
    qp = quasi_polynomial_from_census(g.n, census)
    for k in range(1, args.kmax + 1):
        report(f"polynomial k={k}", qp(k) == brute_count_k(g, k))
    orders = [list(range(g.m))]
    for _ in range(3):
        perm = list(range(g.m))
        rng.shuffle(perm)
        orders.append(perm)
    report("census order invariance", all(nbc_census(g, o) == census for o in orders))
    expansions = [NbcExpansion.build(g, o) for o in orders]
    for t in range(args.trials):
        L = _random_lists(g.n, rng)
        want = brute_count_list(g, L)
        values = [inclusion_exclusion_count(g, L)] + [ex.count(L) for ex in expansions]
        report(f"list trial {t} brute=ie=nbc", all(v == want for v in values))
        X = [v for v in range(g.n) if rng.random() < 0.5]
        report(
            f"list trial {t} switching",
            brute_count_list(switch_graph(g, X), L.switched(X)) == want,
        )
    out.write(f"{'mismatches: ' + str(failures) if failures else 'all checks passed'}\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def _cmd_minimize(g, args, out):
    strategy = "random" if args.random is not None else "exhaustive"
    try:
        outcome = minimize_over_assignments(
            g,
            args.k,
            args.mode,
            U=args.universe,
            strategy=strategy,
            trials=args.random or 0,
            seed=args.seed,
            keep_attaining=False,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(outcome.to_text())
    return EXIT_OK


def _cmd_switch(g, args, out):
    if any(not 0 <= v < g.n for v in args.at):
        raise UsageError(f"--at vertices must lie in 0..{g.n - 1}")
    out.write(switch_graph(g, args.at).to_text())
    return EXIT_OK


_COMMANDS = {
    "poly": _cmd_poly,
    "count": _cmd_count,
    "circuits": _cmd_circuits,
    "verify": _cmd_verify,
    "minimize": _cmd_minimize,
    "switch": _cmd_switch,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        g = parse_graph(_read(args.graph))
        return _COMMANDS[args.command](g, args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (GraphParseError, ListFormatError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceCapError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())
