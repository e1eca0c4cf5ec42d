"""Signed multigraphs: parsing, switching, balance and component structure.

Edge subsets are plain ``int`` bitmasks over edge positions (bit ``i`` set
means edge ``i`` is a member).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int, int]


class GraphParseError(ValueError):
    """Base class for malformed ``.sg`` input."""


class MalformedLineError(GraphParseError):
    pass


class LoopEdgeError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class EdgeCountError(GraphParseError):
    pass


class UnbalancedComponentError(ValueError):
    """Raised when an operation that needs a balanced component gets an unbalanced one."""


class ResourceCapError(RuntimeError):
    """An exponential enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for pos, (u, v, s) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {pos} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"edge {pos} is a loop at vertex {u}")
            if s not in (1, -1):
                raise ValueError(f"edge {pos} has sign {s!r}, expected +1 or -1")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def sign(self, e: int) -> int:
        return self.edges[e][2]

    def negative_count(self, edge_positions: Iterable[int]) -> int:
        return sum(1 for e in edge_positions if self.edges[e][2] < 0)

    def incidence(self, mask: int | None = None) -> list[list[tuple[int, int]]]:
        """Adjacency as ``adj[u] = [(neighbour, edge position), ...]`` restricted to ``mask``."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for pos, (u, v, _) in enumerate(self.edges):
            if mask is None or mask >> pos & 1:
                adj[u].append((v, pos))
                adj[v].append((u, pos))
        return adj

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in self.edges]
        return "\n".join(lines) + "\n"

    def reordered(self, order: Sequence[int]) -> "SignedGraph":
        """Graph whose edge ``i`` is edge ``order[i]`` of this one."""
        return SignedGraph(self.n, tuple(self.edges[p] for p in order))


def mask_of(positions: Iterable[int]) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


_SIGNS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_graph(text: str) -> SignedGraph:
    """Parse ``.sg`` text: a header ``n m`` followed by ``m`` lines ``u v s``."""
    lines = _content_lines(text)
    if not lines:
        raise MalformedLineError("missing header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MalformedLineError(f"line {lineno}: expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        raise EdgeCountError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3 or not parts[0].isdigit() or not parts[1].isdigit() or parts[2] not in _SIGNS:
            raise MalformedLineError(f"line {lineno}: expected 'u v s' with s in +,-,+1,-1, got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise VertexRangeError(f"line {lineno}: vertex index out of range for n={n}")
        if u == v:
            raise LoopEdgeError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v, _SIGNS[parts[2]]))
    return SignedGraph(n, tuple(edges))


def switch_graph(g: SignedGraph, X: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``X``."""
    xs = set(X)
    return SignedGraph(
        g.n,
        tuple((u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges),
    )


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    edges: int  # bitmask
    balanced: bool


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]

    @property
    def balanced_count(self) -> int:
        return sum(1 for c in self.components if c.balanced)

    @property
    def balanced(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.balanced)

    @property
    def unbalanced_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.components:
            if not c.balanced:
                out |= c.vertices
        return frozenset(out)


def _label_component(g, adj, root, seen, label):
    # BFS with sign labels; returns (vertices, edge mask, balanced flag).
    label[root] = 1
    seen[root] = True
    queue = deque([root])
    verts = [root]
    emask = 0
    balanced = True
    while queue:
        u = queue.popleft()
        for w, e in adj[u]:
            emask |= 1 << e
            s = g.edges[e][2]
            if not seen[w]:
                seen[w] = True
                label[w] = label[u] * s
                verts.append(w)
                queue.append(w)
            elif label[w] != label[u] * s:
                balanced = False
    return verts, emask, balanced


def components_of(g: SignedGraph, F: int) -> ComponentReport:
    """Connected components of the spanning subgraph ``<F>`` with balance flags."""
    adj = g.incidence(F)
    seen = [False] * g.n
    label = [0] * g.n
    comps = []
    for r in range(g.n):
        if not seen[r]:
            verts, emask, balanced = _label_component(g, adj, r, seen, label)
            comps.append(Component(frozenset(verts), emask, balanced))
    return ComponentReport(tuple(comps))


def is_balanced(g: SignedGraph, F: int | None = None) -> bool:
    mask = g.full_mask if F is None else F
    return all(c.balanced for c in components_of(g, mask).components)


@dataclass(frozen=True)
class HararySplit:
    X1: frozenset[int]
    X2: frozenset[int]

    def swapped(self) -> "HararySplit":
        return HararySplit(self.X2, self.X1)


def harary_split(g: SignedGraph, vertices: Iterable[int], edges: int) -> HararySplit:
    """Split a balanced connected component so that exactly the negative edges cross.

    ``X1`` is the side holding the smallest vertex of the component.
    """
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("empty component")
    adj = g.incidence(edges)
    label = {verts[0]: 1}
    queue = deque([verts[0]])
    vset = set(verts)
    while queue:
        u = queue.popleft()
        for w, e in adj[u]:
            if w not in vset:
                raise ValueError(f"edge {e} leaves the given vertex set")
            want = label[u] * g.edges[e][2]
            if w not in label:
                label[w] = want
                queue.append(w)
            elif label[w] != want:
                raise UnbalancedComponentError("component contains an unbalanced cycle")
    if len(label) != len(verts):
        raise ValueError("component is not connected")
    x1 = frozenset(v for v in verts if label[v] == 1)
    return HararySplit(x1, frozenset(vset) - x1)


def _tree_path(parent_edge, g, u, w):
    # edge positions on the BFS-tree path between u and w
    def chain(x):
        out = []
        while parent_edge[x] != -1:
            e = parent_edge[x]
            out.append((x, e))
            a, b, _ = g.edges[e]
            x = b if a == x else a
        out.append((x, -1))
        return out

    cu, cw = chain(u), chain(w)
    depth_u = {x: i for i, (x, _) in enumerate(cu)}
    for j, (x, _) in enumerate(cw):
        if x in depth_u:
            i = depth_u[x]
            return [e for _, e in cu[:i]] + [e for _, e in cw[:j]]
    raise AssertionError("vertices not in the same tree")


def find_unbalanced_cycle(g: SignedGraph, F: int) -> list[int] | None:
    """Edge positions of a simple cycle of ``<F>`` with an odd number of negative edges."""
    adj = g.incidence(F)
    seen = [False] * g.n
    label = [0] * g.n
    parent_edge = [-1] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        label[r] = 1
        seen[r] = True
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w, e in adj[u]:
                s = g.edges[e][2]
                if not seen[w]:
                    seen[w] = True
                    label[w] = label[u] * s
                    parent_edge[w] = e
                    queue.append(w)
                elif label[w] != label[u] * s:
                    return _tree_path(parent_edge, g, u, w) + [e]
    return None


def simple_cycle_edge_sets(g: SignedGraph) -> list[int]:
    """Bitmasks of all simple cycles (2-cycles from parallel edges included).

    Paths are grown from each cycle's smallest vertex; both traversal
    directions land on the same mask and collapse in the set.
    """
    adj = g.incidence()
    found: set[int] = set()
    for root in range(g.n):
        stack = [(root, 0, 1 << root)]
        while stack:
            u, emask, vmask = stack.pop()
            for w, e in adj[u]:
                if w < root or emask >> e & 1:
                    continue
                if w == root:
                    if emask:
                        found.add(emask | 1 << e)
                elif not vmask >> w & 1:
                    stack.append((w, emask | 1 << e, vmask | 1 << w))
    return sorted(found)
