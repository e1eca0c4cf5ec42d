"""Exact coloring counts: brute-force oracles and the subset expansion.

All counts are Python ints; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .graph import (
    Component,
    ResourceCapError,
    SignedGraph,
    components_of,
    harary_split,
)

DEFAULT_SUBSET_CAP = 20


def color_set(k: int) -> frozenset[int]:
    """Signed palette of size ``k``: ``{0, ±1..±t}`` for ``k = 2t+1``, ``{±1..±t}`` for ``k = 2t``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    t = k // 2
    colors = {c for a in range(1, t + 1) for c in (a, -a)}
    if k % 2:
        colors.add(0)
    return frozenset(colors)


def negate(colors: Iterable[int]) -> frozenset[int]:
    return frozenset(-c for c in colors)


class ListFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lists", tuple(frozenset(x) for x in self.lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    @classmethod
    def uniform(cls, n: int, k: int) -> "ListAssignment":
        """Every vertex gets the palette ``color_set(k)``."""
        return cls((color_set(k),) * n)

    @property
    def zero_free(self) -> bool:
        return all(0 not in x for x in self.lists)

    @property
    def zero_included(self) -> bool:
        return all(0 in x for x in self.lists)

    def uniform_size(self) -> int | None:
        sizes = {len(x) for x in self.lists}
        return sizes.pop() if len(sizes) == 1 else None

    def switched(self, X: Iterable[int]) -> "ListAssignment":
        xs = set(X)
        return ListAssignment(tuple(negate(x) if v in xs else x for v, x in enumerate(self.lists)))

    def negated(self) -> "ListAssignment":
        return self.switched(range(len(self.lists)))

    def relabeled(self, phi: dict[int, int]) -> "ListAssignment":
        return ListAssignment(tuple(frozenset(phi[c] for c in x) for x in self.lists))

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(x)) for x in self.lists)

    def to_text(self) -> str:
        return "".join(
            f"{v}: {' '.join(str(c) for c in sorted(x))}\n" for v, x in enumerate(self.lists)
        )


def parse_lists(text: str, n: int) -> ListAssignment:
    """Parse ``.lst`` text: one ``v: c1 c2 ...`` line per vertex ``0..n-1``."""
    found: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        try:
            v = int(head)
            colors = [int(tok) for tok in rest.split()]
        except ValueError:
            raise ListFormatError(f"line {lineno}: expected 'v: c1 c2 ...', got {line!r}") from None
        if not sep:
            raise ListFormatError(f"line {lineno}: missing ':'")
        if not 0 <= v < n:
            raise ListFormatError(f"line {lineno}: vertex {v} outside 0..{n - 1}")
        if v in found:
            raise ListFormatError(f"line {lineno}: vertex {v} listed twice")
        if len(set(colors)) != len(colors):
            raise ListFormatError(f"line {lineno}: repeated color in list of vertex {v}")
        if not colors:
            raise ListFormatError(f"line {lineno}: empty list for vertex {v}")
        found[v] = frozenset(colors)
    missing = [v for v in range(n) if v not in found]
    if missing:
        raise ListFormatError(f"no list given for vertices {missing}")
    return ListAssignment(tuple(found[v] for v in range(n)))


def _check_lists(g: SignedGraph, L: ListAssignment) -> None:
    if len(L) != g.n:
        raise ValueError(f"list assignment covers {len(L)} vertices, graph has {g.n}")
    for v, x in enumerate(L.lists):
        if not x:
            raise ValueError(f"vertex {v} has an empty list")


def _backtrack_count(g: SignedGraph, domains: Sequence[Sequence[int]]) -> int:
    # constraints to already-colored (lower-index) neighbours only
    back: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, s in g.edges:
        a, b = (u, v) if u > v else (v, u)
        back[a].append((b, s))
    coloring = [0] * g.n

    def rec(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in domains[v]:
            if all(c != s * coloring[w] for w, s in back[v]):
                coloring[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


def brute_count_k(g: SignedGraph, k: int) -> int:
    """Number of maps ``V -> color_set(k)`` with ``c(u) != sign * c(v)`` on every edge."""
    palette = sorted(color_set(k))
    return _backtrack_count(g, [palette] * g.n)


def brute_count_list(g: SignedGraph, L: ListAssignment) -> int:
    """Number of proper colorings choosing ``c(v)`` from ``L[v]``."""
    _check_lists(g, L)
    return _backtrack_count(g, [sorted(x) for x in L.lists])


def beta(g: SignedGraph, T: Component, L: ListAssignment) -> int:
    """Common colors of a balanced component after switching its lists to all-positive form."""
    split = harary_split(g, T.vertices, T.edges)
    return _beta_from_side(split.X1, T.vertices, L)


def _beta_from_side(negated_side, vertices, L: ListAssignment) -> int:
    common: frozenset[int] | None = None
    for v in vertices:
        x = negate(L[v]) if v in negated_side else L[v]
        common = x if common is None else common & x
        if not common:
            return 0
    return len(common) if common is not None else 0


def gamma(g: SignedGraph, F: int, L: ListAssignment) -> int:
    """1 unless some vertex of an unbalanced component of ``<F>`` lacks color 0."""
    return _gamma_from(components_of(g, F).unbalanced_vertices, L)


def _gamma_from(unbalanced_vertices: Iterable[int], L: ListAssignment) -> int:
    return 0 if any(0 not in L[v] for v in unbalanced_vertices) else 1


def subset_weight(g: SignedGraph, F: int, L: ListAssignment) -> int:
    """``gamma(<F>, L)`` times the product of ``beta`` over balanced components of ``<F>``."""
    report = components_of(g, F)
    if not _gamma_from(report.unbalanced_vertices, L):
        return 0
    return prod(beta(g, T, L) for T in report.balanced)


def inclusion_exclusion_count(
    g: SignedGraph, L: ListAssignment, cap: int = DEFAULT_SUBSET_CAP
) -> int:
    """Signed sum of ``subset_weight`` over all ``2^m`` edge subsets."""
    _check_lists(g, L)
    if g.m > cap:
        raise ResourceCapError(
            f"inclusion-exclusion needs 2^{g.m} terms; subset cap is m <= {cap}"
        )
    total = 0
    for F in range(1 << g.m):
        w = subset_weight(g, F, L)
        if w:
            total += -w if F.bit_count() & 1 else w
    return total
