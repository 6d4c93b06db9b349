"""Immutable simple graphs on at most 64 vertices, stored as bitset adjacency rows.

Vertex sets are plain ``frozenset[int]`` at the API boundary; solvers work on
integer bitmasks internally.  All operations are pure, so graphs can be shared
freely between concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64

#: Marker returned by distance/diameter for disconnected pairs.
INFINITE = math.inf


class GraphError(ValueError):
    """Structurally invalid graph construction or argument."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    """Unpack a bitmask into a frozenset of vertex indices."""
    return frozenset(bits(mask))


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Loop-free undirected graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return set_of(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def closed_masks(self) -> list[int]:
        return [self.adj[v] | (1 << v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    # -- structural primitives ---------------------------------------------

    def induced(self, S: Iterable[int]) -> "Graph":
        """Subgraph induced by S, relabeled 0..|S|-1 by ascending original index."""
        keep = sorted(set(S))
        self._check_vertices(keep)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), tuple(rows))

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(bits(mask))

    def distance(self, u: int, v: int) -> int | float:
        """Breadth-first shortest-path length; INFINITE when disconnected."""
        self._check_vertices((u, v))
        if u == v:
            return 0
        seen = 1 << u
        frontier = 1 << u
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in bits(frontier):
                nxt |= self.adj[w]
            nxt &= ~seen
            if nxt >> v & 1:
                return d
            seen |= nxt
            frontier = nxt
        return INFINITE

    def eccentricity_masks(self, u: int) -> list[int]:
        """Bitmasks of vertices at BFS distance 0, 1, 2, ... from u."""
        layers = [1 << u]
        seen = 1 << u
        while True:
            nxt = 0
            for w in bits(layers[-1]):
                nxt |= self.adj[w]
            nxt &= ~seen
            if not nxt:
                return layers
            layers.append(nxt)
            seen |= nxt

    def diameter(self) -> int | float:
        """Largest pairwise distance; INFINITE when disconnected, 0 for n <= 1."""
        if self.n <= 1:
            return 0
        if not self.is_connected():
            return INFINITE
        best = 0
        for u in range(self.n):
            best = max(best, len(self.eccentricity_masks(u)) - 1)
        return best

    def is_independent(self, S: Iterable[int]) -> bool:
        mask = mask_of(S)
        self._check_mask(mask)
        return all(self.adj[v] & mask == 0 for v in bits(mask))

    def is_dominating(self, S: Iterable[int]) -> bool:
        mask = mask_of(S)
        self._check_mask(mask)
        cov = mask
        for v in bits(mask):
            cov |= self.adj[v]
        return cov == self.vertex_mask

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, ordered by smallest member."""
        out = []
        remaining = self.vertex_mask
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.adj[w]
                frontier = nxt & ~comp
                comp |= frontier
            out.append(set_of(comp))
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.m == self.n - 1

    # -- helpers -----------------------------------------------------------

    def _check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    def _check_mask(self, mask: int) -> None:
        if mask & ~self.vertex_mask:
            raise GraphError("vertex set not contained in the host graph")

    def __repr__(self) -> str:  # short form, edges only
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are rejected."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with the center at vertex 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
