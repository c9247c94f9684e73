"""Immutable simple undirected graphs on vertices 0..n-1.

Vertex sets are plain ``frozenset[int]`` throughout the package.  All
operations are pure functions of immutable values, so graphs can be shared
freely across threads or processes.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .sequences import DegreeSequence


class Graph:
    """Simple graph stored as one frozen neighbor set per vertex.

    Build with ``Graph(n, edges)``; loops and out-of-range endpoints are
    rejected, duplicate edges collapse.
    """

    __slots__ = ("n", "_adj", "_m", "_hash", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._m = m
        self._hash: int | None = None
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        n = len(adjacency)
        edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
        g = cls(n, edges)
        # Reject asymmetric input: every listed neighbor must appear both ways.
        for u in range(n):
            if set(adjacency[u]) != set(g._adj[u]):
                raise ValueError("adjacency lists are not symmetric or contain loops")
        return g

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge query ({u}, {v}) out of range")
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks (bit v of mask u == edge uv)."""
        if self._masks is None:
            masks = []
            for s in self._adj:
                mask = 0
                for v in s:
                    mask |= 1 << v
                masks.append(mask)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self._adj == other._adj
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def complement(g: Graph) -> Graph:
    """Graph with edge {u,v} exactly where g has none."""
    n = g.n
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if v not in g.adjacency[u]
    ]
    return Graph(n, edges)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled 0..|S|-1 in ascending
    order of the original indices."""
    kept = sorted(set(vertices))
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u in kept
        for v in g.adjacency[u]
        if u < v and v in index
    ]
    return Graph(len(kept), edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; vertex blocks are offset cumulatively, no cross edges."""
    n = sum(p.n for p in parts)
    edges: list[tuple[int, int]] = []
    offset = 0
    for p in parts:
        edges.extend((u + offset, v + offset) for u, v in p.edges())
        offset += p.n
    return Graph(n, edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    components: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(frozenset(comp))
    return components


# Named constructors


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive vertex blocks in the
    given size order, all cross-part pairs adjacent."""
    sizes = [int(a) for a in sizes]
    if any(a < 1 for a in sizes):
        raise ValueError("part sizes must be positive")
    bounds = []
    start = 0
    for a in sizes:
        bounds.append((start, start + a))
        start += a
    edges = []
    for i, (s1, e1) in enumerate(bounds):
        for s2, e2 in bounds[i + 1 :]:
            edges.extend((u, v) for u in range(s1, e1) for v in range(s2, e2))
    return Graph(start, edges)


def clique_union(sizes: Iterable[int]) -> Graph:
    """Disjoint union of cliques with the given sizes, in order."""
    return disjoint_union([complete_graph(int(a)) for a in sizes])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
