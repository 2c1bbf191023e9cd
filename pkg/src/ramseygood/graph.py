"""Simple undirected graphs stored as per-vertex bitsets.

Adjacency of vertex ``v`` is a Python ``int`` whose bit ``u`` is set when
``uv`` is an edge.  Python integers are unbounded, so graphs wider than a
machine word simply use longer integers; the exact-search routines elsewhere
carry their own size guards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full or (a >> v) & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(a):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v, a in enumerate(self.adj):
            row = 0
            for u in bits(a):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(a << shift for a in other.adj))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.vertex_mask

    def component_mask(self, v: int, within: int | None = None) -> int:
        within = self.vertex_mask if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self) -> list[frozenset[int]]:
        """Connected components ordered by their smallest vertex."""
        left = self.vertex_mask
        out = []
        while left:
            c = self.component_mask(lowest(left))
            out.append(frozenset(bits(c)))
            left &= ~c
        return out

    def is_clique(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all((self.adj[v] | (1 << v)) & m == m for v in bits(m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return path_power(n, 1)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return cycle_power(n, 1)


def path_power(n: int, k: int) -> Graph:
    """k-th power of the n-vertex path: ``i ~ j`` iff ``0 < |i-j| <= k``."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))))


def cycle_power(n: int, k: int) -> Graph:
    """k-th power of the n-cycle; complete once ``2k+1 >= n``."""
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 and k >= 1")
    edges = []
    for i, j in combinations(range(n), 2):
        d = j - i
        if min(d, n - d) <= k:
            edges.append((i, j))
    return Graph.from_edges(n, edges)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    total = len(part)
    return Graph.from_edges(total, ((u, v) for u, v in combinations(range(total), 2) if part[u] != part[v]))
