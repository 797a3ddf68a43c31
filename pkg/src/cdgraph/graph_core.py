"""Immutable simple graphs and the structural queries used everywhere else.

Vertices are ``0..n-1``. A vertex labelled ``v_i`` in 1-based notation is
vertex ``i - 1`` here.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Unreachable(enum.Enum):
    """Distance between vertices in different components."""

    INF = "inf"

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"


INF = Unreachable.INF

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be an integer >= 1, got {self.n!r}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)!r} is not a normalised pair in range 0..{self.n - 1}")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in descending order."""
        return sorted(self.degrees(), reverse=True)

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        """Return a new graph with ``extra`` edges added."""
        return new_graph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            frozenset((u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self.adj[u]),
        )

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(vs[j] in self.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph from unordered pairs, dropping duplicates.

    Self-loops and out-of-range endpoints raise :class:`GraphError` naming
    the offending pair.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphError(f"vertex count must be an integer >= 1, got {n!r}")
    normalised = set()
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a pair")
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphError(f"edge {(u, v)!r} has non-integer endpoints")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {(u, v)!r} is a self-loop")
        normalised.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(normalised))


@dataclass(frozen=True)
class DistanceTable:
    n: int
    dist: tuple[tuple[int | Unreachable, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int | Unreachable:
        u, v = uv
        return self.dist[u][v]

    def transmission(self, v: int) -> int:
        """Sum of distances from ``v``; only defined when every vertex is reachable."""
        row = self.dist[v]
        if INF in row:
            raise GraphError(f"vertex {v} cannot reach vertex {row.index(INF)}")
        return sum(row)  # type: ignore[arg-type]

    def max_finite(self) -> int:
        return max(d for row in self.dist for d in row if d is not INF)


def bfs(g: Graph, source: int) -> list[int | Unreachable]:
    dist: list[int | Unreachable] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = du + 1  # type: ignore[operator]
                queue.append(w)
    return dist


def distances(g: Graph) -> DistanceTable:
    return DistanceTable(g.n, tuple(tuple(bfs(g, s)) for s in range(g.n)))


def diameter(g: Graph) -> int | Unreachable:
    """Largest distance over pairs of distinct vertices, or ``INF`` if disconnected."""
    if g.n < 2:
        raise GraphError("diameter needs at least two vertices")
    table = distances(g)
    if any(INF in row for row in table.dist):
        return INF
    return table.max_finite()


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices by the Hopcroft-Tarjan low-point DFS.

    Isolated vertices are reported as singleton blocks. Blocks are ordered by
    their sorted vertex tuples so the result is deterministic.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        # iterative DFS: (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(frozenset(comp))
    blocks.sort(key=lambda b: sorted(b))
    count: dict[int, int] = {}
    for b in blocks:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)
    return BlockDecomposition(tuple(blocks), cuts)


def is_block(g: Graph) -> bool:
    """True when ``g`` is connected and has no cut vertex."""
    return is_connected(g) and not block_decomposition(g).cut_vertices
