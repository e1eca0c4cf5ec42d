"""Circuits of a signed graph and the no-broken-circuit expansion.

A circuit is a balanced cycle or a barbell (two unbalanced cycles joined by
a possibly trivial path).  Removing the largest edge of a circuit under a
linear edge order gives a broken circuit; subsets containing none of them
("NBC subsets") carry the whole coloring count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .counting import ListAssignment, _beta_from_side, _check_lists
from .graph import (
    ResourceCapError,
    SignedGraph,
    bits,
    components_of,
    harary_split,
    simple_cycle_edge_sets,
)

DEFAULT_CIRCUIT_CAP = 100_000
DEFAULT_NBC_EDGE_CAP = 30


@dataclass(frozen=True)
class Cycle:
    edges: int
    vertices: frozenset[int]
    balanced: bool

    @property
    def size(self) -> int:
        return self.edges.bit_count()


@dataclass(frozen=True)
class Barbell:
    cycle1: Cycle
    cycle2: Cycle
    path: int  # edge mask, 0 when the cycles share a vertex

    @property
    def edges(self) -> int:
        return self.cycle1.edges | self.cycle2.edges | self.path


@dataclass(frozen=True)
class Circuit:
    kind: str  # "cycle" or "barbell"
    edges: int
    source: Cycle | Barbell


@dataclass(frozen=True)
class BrokenCircuit:
    edges: int
    circuit: Circuit


@dataclass
class BrokenCircuitFamily:
    broken: list[BrokenCircuit]
    multiplicity: dict[int, int]
    minimal: list[int]

    @property
    def distinct(self) -> list[int]:
        return sorted(self.multiplicity)


def _vertices_of(g: SignedGraph, mask: int) -> frozenset[int]:
    out = set()
    for e in bits(mask):
        u, v, _ = g.edges[e]
        out.add(u)
        out.add(v)
    return frozenset(out)


def enumerate_cycles(g: SignedGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[Cycle]:
    """All simple cycles, sorted by edge bitmask, each flagged balanced or not."""
    masks = simple_cycle_edge_sets(g)
    if len(masks) > cap:
        raise ResourceCapError(f"{len(masks)} cycles exceed the circuit cap of {cap}")
    return [
        Cycle(mask, _vertices_of(g, mask), g.negative_count(bits(mask)) % 2 == 0)
        for mask in masks
    ]


def _connecting_paths(g, adj, c1: Cycle, c2: Cycle, limit: int):
    # simple paths from V(c1) to V(c2) with every interior vertex outside both cycles
    blocked = c1.vertices | c2.vertices
    out = []
    for start in sorted(c1.vertices):
        stack = [(start, 0, frozenset([start]))]
        while stack:
            u, emask, seen = stack.pop()
            for w, e in adj[u]:
                if w in seen:
                    continue
                if w in c2.vertices:
                    out.append(emask | 1 << e)
                    if len(out) > limit:
                        raise ResourceCapError(f"barbell paths exceed the circuit cap of {limit}")
                elif w not in blocked:
                    stack.append((w, emask | 1 << e, seen | {w}))
    return out


def enumerate_barbells(
    g: SignedGraph, cap: int = DEFAULT_CIRCUIT_CAP, cycles: list[Cycle] | None = None
) -> list[Barbell]:
    """All barbells, one per distinct edge set, sorted by edge bitmask."""
    if cycles is None:
        cycles = enumerate_cycles(g, cap)
    unbalanced = [c for c in cycles if not c.balanced]
    adj = g.incidence()
    found: dict[int, Barbell] = {}
    for i, c1 in enumerate(unbalanced):
        for c2 in unbalanced[i + 1 :]:
            shared = c1.vertices & c2.vertices
            if len(shared) == 1:
                b = Barbell(c1, c2, 0)
                found.setdefault(b.edges, b)
            elif not shared:
                for path in _connecting_paths(g, adj, c1, c2, cap):
                    b = Barbell(c1, c2, path)
                    found.setdefault(b.edges, b)
            if len(found) + len(cycles) > cap:
                raise ResourceCapError(f"circuit count exceeds the cap of {cap}")
    return [found[k] for k in sorted(found)]


def enumerate_circuits(g: SignedGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[Circuit]:
    cycles = enumerate_cycles(g, cap)
    out = [Circuit("cycle", c.edges, c) for c in cycles if c.balanced]
    out += [Circuit("barbell", b.edges, b) for b in enumerate_barbells(g, cap, cycles)]
    return out


def check_order(order: Sequence[int] | None, m: int) -> list[int]:
    """Validate an edge order, given as edge positions from smallest to largest."""
    if order is None:
        return list(range(m))
    order = list(order)
    if sorted(order) != list(range(m)):
        raise ValueError(f"edge order must be a permutation of 0..{m - 1}")
    return order


def _minimal_sets(masks) -> list[int]:
    minimal: list[int] = []
    for mask in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(mask & sub == sub for sub in minimal):
            minimal.append(mask)
    return sorted(minimal)


def broken_circuits(
    g: SignedGraph,
    order: Sequence[int] | None = None,
    cap: int = DEFAULT_CIRCUIT_CAP,
    circuits: list[Circuit] | None = None,
) -> BrokenCircuitFamily:
    """Broken circuits under ``order`` plus the inclusion-minimal ones used for pruning."""
    order = check_order(order, g.m)
    rank = [0] * g.m
    for r, e in enumerate(order):
        rank[e] = r
    if circuits is None:
        circuits = enumerate_circuits(g, cap)
    broken = []
    multiplicity: dict[int, int] = {}
    for c in circuits:
        top = max(bits(c.edges), key=rank.__getitem__)
        mask = c.edges & ~(1 << top)
        broken.append(BrokenCircuit(mask, c))
        multiplicity[mask] = multiplicity.get(mask, 0) + 1
    return BrokenCircuitFamily(broken, multiplicity, _minimal_sets(multiplicity))


def nbc_subsets(
    g: SignedGraph,
    order: Sequence[int] | None = None,
    cap: int = DEFAULT_NBC_EDGE_CAP,
    family: BrokenCircuitFamily | None = None,
) -> list[int]:
    """Edge subsets containing no broken circuit, grown depth-first with pruning."""
    if g.m > cap:
        raise ResourceCapError(f"NBC census limited to m <= {cap}, graph has m = {g.m}")
    if family is None:
        family = broken_circuits(g, order)
    # a broken circuit only needs checking when its highest-position edge is added
    by_top: list[list[int]] = [[] for _ in range(g.m)]
    for mask in family.minimal:
        by_top[mask.bit_length() - 1].append(mask)
    out = []
    stack = [(0, 0)]
    while stack:
        mask, nxt = stack.pop()
        out.append(mask)
        for e in range(nxt, g.m):
            grown = mask | 1 << e
            if any(grown & bc == bc for bc in by_top[e]):
                continue
            stack.append((grown, e + 1))
    return sorted(out)


@dataclass(frozen=True)
class NbcCensus:
    c: tuple[int, ...]
    c_star: tuple[int, ...]


def nbc_census(
    g: SignedGraph, order: Sequence[int] | None = None, cap: int = DEFAULT_NBC_EDGE_CAP
) -> NbcCensus:
    """Counts of NBC subsets by size, all (``c``) and with balanced ``<F>`` (``c_star``)."""
    c = [0] * (g.n + 1)
    c_star = [0] * max(g.n, 1)
    for F in nbc_subsets(g, order, cap):
        i = F.bit_count()
        c[i] += 1
        if all(comp.balanced for comp in components_of(g, F).components):
            c_star[i] += 1
    return NbcCensus(tuple(c), tuple(c_star))


@dataclass(frozen=True)
class QuasiPolynomial:
    """Coloring count at odd ``k`` (``odd``) and even ``k`` (``even``); coefficients descending."""

    odd: tuple[int, ...]
    even: tuple[int, ...]

    @staticmethod
    def _horner(coeffs, k: int) -> int:
        acc = 0
        for a in coeffs:
            acc = acc * k + a
        return acc

    def __call__(self, k: int) -> int:
        return self._horner(self.odd if k % 2 else self.even, k)

    def p1(self, k: int) -> int:
        return self._horner(self.odd, k)

    def p0(self, k: int) -> int:
        return self._horner(self.even, k)


def quasi_polynomial_from_census(n: int, census: NbcCensus) -> QuasiPolynomial:
    if n == 0:
        return QuasiPolynomial((1,), (1,))
    odd = tuple((-1) ** i * census.c[i] for i in range(n + 1))
    even = tuple((-1) ** i * census.c_star[i] for i in range(n)) + (0,)
    return QuasiPolynomial(odd, even)


def quasi_polynomial(
    g: SignedGraph, order: Sequence[int] | None = None, cap: int = DEFAULT_NBC_EDGE_CAP
) -> QuasiPolynomial:
    return quasi_polynomial_from_census(g.n, nbc_census(g, order, cap))


@dataclass(frozen=True)
class _Term:
    sign: int
    balanced: bool
    unbalanced_vertices: tuple[int, ...]
    # per balanced component: (vertices, side whose lists get negated)
    blocks: tuple[tuple[tuple[int, ...], frozenset[int]], ...]


@dataclass
class NbcExpansion:
    """Precomputed NBC terms for repeated evaluation of list-coloring counts."""

    graph: SignedGraph
    terms: list[_Term] = field(repr=False)

    @classmethod
    def build(
        cls, g: SignedGraph, order: Sequence[int] | None = None, cap: int = DEFAULT_NBC_EDGE_CAP
    ) -> "NbcExpansion":
        terms = []
        for F in nbc_subsets(g, order, cap):
            report = components_of(g, F)
            blocks = []
            for T in report.balanced:
                split = harary_split(g, T.vertices, T.edges)
                blocks.append((tuple(sorted(T.vertices)), split.X1))
            unb = tuple(sorted(report.unbalanced_vertices))
            terms.append(_Term(-1 if F.bit_count() & 1 else 1, not unb, unb, tuple(blocks)))
        return cls(g, terms)

    def count(self, L: ListAssignment) -> int:
        _check_lists(self.graph, L)
        zero_free, zero_included = L.zero_free, L.zero_included
        total = 0
        for t in self.terms:
            if zero_free and not t.balanced:
                continue
            if not zero_included and any(0 not in L[v] for v in t.unbalanced_vertices):
                continue
            w = 1
            for verts, side in t.blocks:
                w *= _beta_from_side(side, verts, L)
                if not w:
                    break
            total += t.sign * w
        return total


def nbc_list_count(
    g: SignedGraph,
    L: ListAssignment,
    order: Sequence[int] | None = None,
    cap: int = DEFAULT_NBC_EDGE_CAP,
) -> int:
    """List-coloring count as a signed sum over NBC subsets."""
    return NbcExpansion.build(g, order, cap).count(L)
