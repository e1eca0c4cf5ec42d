"""Searching k-assignments for fewer list colorings than the palette count.

The search runs over a bounded color universe ``[-U, U]``, so a negative
result is evidence rather than proof.  Exhaustive search enumerates one
assignment per orbit of the signed relabeling group (permutations of
``1..U`` combined with sign flips, commuting with negation), which leaves
every count unchanged.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .circuits import DEFAULT_NBC_EDGE_CAP, NbcExpansion
from .counting import ListAssignment, brute_count_k, brute_count_list, negate
from .graph import ResourceCapError, SignedGraph, components_of

LN_ONE_PLUS_SQRT2 = math.asinh(1.0)  # ln(1 + sqrt 2) = 0.881373587...

MODES = ("any", "zero-free", "zero-included")
DEFAULT_BUDGET = 10_000_000
# Largest relabeling group enumerated explicitly (2^6 * 6! = 46080).
MAX_GROUP_ORDER = 50_000


def alpha(g: SignedGraph, e: int, L: ListAssignment, k: int) -> int:
    """Colors of ``L[u]`` with no sign-matched partner in ``L[v]`` across edge ``e``."""
    u, v, s = g.edges[e]
    if len(L[u]) != k or len(L[v]) != k:
        raise ValueError(f"edge {e}: endpoint lists must have exactly {k} colors")
    lu = L[u] if s > 0 else negate(L[u])
    return k - len(lu & L[v])


@dataclass(frozen=True)
class ThresholdReport:
    m: int
    t1: int
    t2: float
    min_odd_k: int
    min_even_k: int


def thresholds(m: int) -> ThresholdReport:
    if m < 0:
        raise ValueError("edge count must be non-negative")
    t1 = comb(m, 3) + comb(m, 4) + m - 1
    t2 = (m - 1) / LN_ONE_PLUS_SQRT2
    k = max(math.floor(t2) + 1, 1)
    odd = k if k % 2 else k + 1
    even = k if k % 2 == 0 else k + 1
    return ThresholdReport(m, t1, t2, odd, even)


@dataclass(frozen=True)
class MinimizerStructure:
    alphas: tuple[int, ...]
    edges_matched: bool
    negation_closed: bool

    @property
    def ok(self) -> bool:
        return self.edges_matched and self.negation_closed


def check_minimizer_structure(g: SignedGraph, L: ListAssignment, k: int) -> MinimizerStructure:
    """Whether every edge has ``alpha == 0`` and lists on unbalanced components are symmetric."""
    alphas = tuple(alpha(g, e, L, k) for e in range(g.m))
    unbalanced = components_of(g, g.full_mask).unbalanced_vertices
    closed = all(L[v] == negate(L[v]) for v in unbalanced)
    return MinimizerStructure(alphas, all(a == 0 for a in alphas), closed)


def forest_gap(forest: SignedGraph, L: ListAssignment, k: int) -> tuple[int, int]:
    """Both sides of the forest gap inequality, treating every edge as positive.

    Left: ``k^c - prod_T |common colors of T|`` over the ``c`` trees.
    Right: ``k^(c-1) * sum_edges (k - |L(u) & L(v)|)``.
    """
    report = components_of(forest, forest.full_mask)
    if forest.m != forest.n - len(report.components):
        raise ValueError("input is not a forest")
    if any(len(x) != k for x in L.lists):
        raise ValueError(f"every list must have exactly {k} colors")
    c = len(report.components)
    prod = 1
    for T in report.components:
        prod *= len(frozenset.intersection(*(L[v] for v in T.vertices)))
    lhs = k**c - prod
    rhs = k ** (c - 1) * sum(k - len(L[u] & L[v]) for u, v, _ in forest.edges) if c else 0
    return lhs, rhs


def forest_gap_check(forest: SignedGraph, L: ListAssignment, k: int) -> bool:
    lhs, rhs = forest_gap(forest, L, k)
    return lhs <= rhs


def universe(k: int, mode: str, U: int) -> tuple[list[int], frozenset[int]]:
    """Free colors to choose from and colors forced into every list."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    colors = list(range(-U, U + 1))
    if mode == "any":
        return colors, frozenset()
    nonzero = [c for c in colors if c]
    return nonzero, frozenset({0}) if mode == "zero-included" else frozenset()


def candidate_lists(k: int, mode: str, U: int) -> list[frozenset[int]]:
    free, forced = universe(k, mode, U)
    r = k - len(forced)
    if r < 0:
        return []
    return sorted(
        (forced | frozenset(c) for c in itertools.combinations(free, r)),
        key=lambda x: tuple(sorted(x)),
    )


def signed_relabelings(U: int) -> list[dict[int, int]]:
    """All bijections of ``[-U, U]`` with ``phi(-x) == -phi(x)``."""
    out = []
    for perm in itertools.permutations(range(1, U + 1)):
        for flips in itertools.product((1, -1), repeat=U):
            phi = {0: 0}
            for a, (b, s) in enumerate(zip(perm, flips), start=1):
                phi[a] = s * b
                phi[-a] = -s * b
            out.append(phi)
    return out


def random_signed_relabeling(colors: Iterable[int], rng: random.Random) -> dict[int, int]:
    """Random sign-respecting bijection defined on ``colors`` and their negatives."""
    mags = sorted({abs(c) for c in colors} - {0})
    targets = rng.sample(range(1, 4 * len(mags) + 2), len(mags))
    phi = {0: 0}
    for a, b in zip(mags, targets):
        b *= rng.choice((1, -1))
        phi[a], phi[-a] = b, -b
    return phi


def canonical_count(g: SignedGraph, k: int) -> int:
    return brute_count_k(g, k)


@dataclass
class SearchOutcome:
    mode: str
    k: int
    universe_bound: int
    strategy: str
    trials: int
    seed: int | None
    min_count: int
    argmin: ListAssignment
    canonical_count: int
    counterexample_found: bool
    evaluated: int
    attaining: list[ListAssignment] = field(default_factory=list, repr=False)

    def to_text(self) -> str:
        lines = [
            f"mode: {self.mode}",
            f"k: {self.k}",
            f"U: {self.universe_bound}",
            f"strategy: {self.strategy}" + (f" seed={self.seed}" if self.strategy == "random" else ""),
            f"trials: {self.trials}",
            f"evaluated: {self.evaluated}",
            f"minCount: {self.min_count}",
            f"canonicalCount: {self.canonical_count}",
            f"counterexampleFound: {'true' if self.counterexample_found else 'false'}",
            "argmin:",
        ]
        return "\n".join(lines) + "\n" + self.argmin.to_text()


def _counter(g: SignedGraph):
    if g.m <= DEFAULT_NBC_EDGE_CAP:
        return NbcExpansion.build(g).count
    return lambda L: brute_count_list(g, L)


def _check_mode(k: int, mode: str) -> None:
    if mode == "zero-free" and k % 2:
        raise ValueError("zero-free search compares against the even-k count; k must be even")
    if mode == "zero-included" and k % 2 == 0:
        raise ValueError("zero-included search compares against the odd-k count; k must be odd")


def _orbit_reps(group, candidates):
    # one representative (the smallest) per orbit, with its stabilizer
    seen: set[frozenset[int]] = set()
    for S in candidates:
        if S in seen:
            continue
        stab = []
        for phi in group:
            image = frozenset(phi[c] for c in S)
            seen.add(image)
            if image == S:
                stab.append(phi)
        yield S, stab


def _exhaustive(n: int, candidates, group):
    if group is None:
        yield from itertools.product(candidates, repeat=n)
        return

    def rec(prefix, grp):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        if len(grp) == 1:
            for tail in itertools.product(candidates, repeat=n - len(prefix)):
                yield tuple(prefix) + tail
            return
        for S, stab in _orbit_reps(grp, candidates):
            prefix.append(S)
            yield from rec(prefix, stab)
            prefix.pop()

    yield from rec([], group)


def minimize_over_assignments(
    g: SignedGraph,
    k: int,
    mode: str = "any",
    U: int | None = None,
    strategy: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    keep_attaining: bool = True,
    symmetry: bool = True,
) -> SearchOutcome:
    """Smallest list-coloring count over k-assignments drawn from ``[-U, U]``.

    ``attaining`` collects the searched assignments whose count equals the
    palette count (one per relabeling orbit when ``symmetry`` is on).
    """
    if k < 1:
        raise ValueError("k must be positive")
    _check_mode(k, mode)
    U = k if U is None else U
    candidates = candidate_lists(k, mode, U)
    if not candidates:
        raise ValueError(f"universe [-{U}, {U}] has no {k}-lists in mode {mode}")
    count = _counter(g)
    target = canonical_count(g, k)

    if strategy == "exhaustive":
        total = len(candidates) ** g.n
        if total > budget:
            raise ResourceCapError(
                f"exhaustive search needs {total} assignments (budget {budget}); "
                "use the random strategy"
            )
        small = 2**U * math.factorial(U) <= MAX_GROUP_ORDER
        group = signed_relabelings(U) if symmetry and small else None
        source: Iterable[Sequence[frozenset[int]]] = _exhaustive(g.n, candidates, group)
        n_trials = total
    elif strategy == "random":
        rng = random.Random(seed)
        source = (tuple(rng.choice(candidates) for _ in range(g.n)) for _ in range(trials))
        n_trials = trials
    else:
        raise ValueError("strategy must be 'exhaustive' or 'random'")

    best = None
    best_key = None
    attaining = []
    evaluated = 0
    for lists in source:
        L = ListAssignment(lists)
        value = count(L)
        evaluated += 1
        key = L.sort_key()
        if best is None or value < best or (value == best and key < best_key):
            best, best_key, argmin = value, key, L
        if keep_attaining and value == target:
            attaining.append(L)

    return SearchOutcome(
        mode=mode,
        k=k,
        universe_bound=U,
        strategy=strategy,
        trials=n_trials,
        seed=seed if strategy == "random" else None,
        min_count=best,
        argmin=argmin,
        canonical_count=target,
        counterexample_found=best < target,
        evaluated=evaluated,
        attaining=attaining,
    )
