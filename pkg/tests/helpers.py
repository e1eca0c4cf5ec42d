"""Fixture graphs, small-graph generators and random inputs shared by the tests."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

from sigcolor.counting import ListAssignment
from sigcolor.graph import SignedGraph, parse_graph

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name: str) -> SignedGraph:
    return parse_graph((DATA / name).read_text())


UNBALANCED_TRIANGLE = SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, -1)))
BALANCED_TRIANGLE = SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))
UNBALANCED_DIGON = SignedGraph(2, ((0, 1, 1), (0, 1, -1)))
DOUBLE_DIGON = SignedGraph(3, ((0, 1, 1), (0, 1, -1), (1, 2, 1), (1, 2, -1)))
DIGON_PATH = SignedGraph(4, ((0, 1, 1), (0, 1, -1), (1, 2, 1), (2, 3, 1), (2, 3, -1)))
K2_POS = SignedGraph(2, ((0, 1, 1),))
K2_NEG = SignedGraph(2, ((0, 1, -1),))

FIXTURES = {
    "unbalanced_triangle": UNBALANCED_TRIANGLE,
    "balanced_triangle": BALANCED_TRIANGLE,
    "unbalanced_digon": UNBALANCED_DIGON,
    "double_digon": DOUBLE_DIGON,
    "digon_path": DIGON_PATH,
    "k2_positive": K2_POS,
}


def _connected(n: int, edges) -> bool:
    if n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == n


@lru_cache(maxsize=None)
def connected_simple_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Connected simple graphs on ``n`` labeled vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    classes = {}
    for r in range(len(pairs) + 1):
        for edges in itertools.combinations(pairs, r):
            if not _connected(n, edges):
                continue
            canon = min(
                tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms
            )
            classes.setdefault(canon, edges)
    return tuple(classes[c] for c in sorted(classes))


def signings(n: int, edges):
    for signs in itertools.product((1, -1), repeat=len(edges)):
        yield SignedGraph(n, tuple((a, b, s) for (a, b), s in zip(edges, signs)))


def small_signed_graphs(max_n: int = 4, max_m: int = 6):
    """Every sign pattern on every connected simple graph with ``n <= max_n``."""
    for n in range(1, max_n + 1):
        for edges in connected_simple_graphs(n):
            if len(edges) <= max_m:
                yield from signings(n, edges)


def random_lists(n: int, rng: random.Random, lo: int = -5, hi: int = 5, max_size: int = 4):
    return ListAssignment(
        tuple(frozenset(rng.sample(range(lo, hi + 1), rng.randint(1, max_size))) for _ in range(n))
    )


def random_k_lists(n: int, k: int, rng: random.Random, lo: int = -4, hi: int = 4):
    return ListAssignment(tuple(frozenset(rng.sample(range(lo, hi + 1), k)) for _ in range(n)))


def random_signed_graph(rng: random.Random, n: int, m: int, multigraph: bool = True) -> SignedGraph:
    edges = []
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return SignedGraph(n, ())
    if not multigraph:
        m = min(m, len(pairs))
        chosen = rng.sample(pairs, m)
    else:
        chosen = [rng.choice(pairs) for _ in range(m)]
    for a, b in chosen:
        edges.append((a, b, rng.choice((1, -1))))
    return SignedGraph(n, tuple(edges))


@st.composite
def signed_graphs(draw, max_n: int = 5, max_m: int = 7, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return SignedGraph(n, ())
    edge = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from((1, -1))).filter(
        lambda e: e[0] != e[1]
    )
    return SignedGraph(n, tuple(draw(st.lists(edge, max_size=max_m))))


@st.composite
def graphs_with_lists(draw, max_n: int = 4, max_m: int = 6, lo: int = -4, hi: int = 4, max_size: int = 3):
    g = draw(signed_graphs(max_n=max_n, max_m=max_m))
    color_list = st.frozensets(st.integers(lo, hi), min_size=1, max_size=max_size)
    L = ListAssignment(tuple(draw(color_list) for _ in range(g.n)))
    return g, L

