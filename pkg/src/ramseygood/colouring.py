"""Edge colourings of complete graphs, embeddings, and the witness validator."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graph import Graph, bits

RED, BLUE = 0, 1


@dataclass(frozen=True)
class EdgeColouring:
    """An r-colouring of the edges of K_n.

    ``layers[c]`` holds the bitset rows of the colour-c subgraph; together the
    layers partition the edge set of K_n.
    """

    n: int
    r: int
    layers: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.r < 1 or len(self.layers) != self.r:
            raise ValueError("need one layer per colour")
        full = (1 << self.n) - 1
        for v in range(self.n):
            seen = 0
            for rows in self.layers:
                if rows[v] & seen:
                    raise ValueError(f"vertex {v} has a pair with two colours")
                seen |= rows[v]
            if seen != full & ~(1 << v):
                raise ValueError(f"vertex {v} has an uncoloured pair")

    @classmethod
    def from_function(cls, n: int, r: int, colour: Callable[[int, int], int]) -> "EdgeColouring":
        layers = [[0] * n for _ in range(r)]
        for u in range(n):
            for v in range(u + 1, n):
                c = colour(u, v)
                if not 0 <= c < r:
                    raise ValueError(f"colour {c} out of range for pair {u},{v}")
                layers[c][u] |= 1 << v
                layers[c][v] |= 1 << u
        return cls(n, r, tuple(tuple(rows) for rows in layers))

    @classmethod
    def from_graph(cls, blue: Graph) -> "EdgeColouring":
        """Two-colouring whose blue edges are ``blue`` and red edges the rest."""
        red = blue.complement()
        return cls(blue.n, 2, (red.adj, blue.adj))

    @classmethod
    def monochromatic(cls, n: int, colour: int = RED, r: int = 2) -> "EdgeColouring":
        return cls.from_function(n, r, lambda u, v: colour)

    def colour(self, u: int, v: int) -> int:
        for c, rows in enumerate(self.layers):
            if (rows[u] >> v) & 1:
                return c
        raise ValueError(f"{u},{v} is not a pair of distinct vertices")

    def graph(self, c: int) -> Graph:
        return Graph(self.n, self.layers[c])

    @property
    def red(self) -> Graph:
        return self.graph(RED)

    @property
    def blue(self) -> Graph:
        return self.graph(BLUE)

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.colour(u, v)) for u in range(self.n) for v in range(u + 1, self.n)]

    def restrict(self, vertices: Sequence[int]) -> "EdgeColouring":
        """Colouring induced on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        return EdgeColouring.from_function(len(vs), self.r, lambda i, j: self.colour(vs[i], vs[j]))

    def permute_colours(self, perm: Sequence[int]) -> "EdgeColouring":
        """Colour c becomes ``perm[c]``."""
        layers = [None] * self.r
        for c, rows in enumerate(self.layers):
            layers[perm[c]] = rows
        return EdgeColouring(self.n, self.r, tuple(layers))

    def extend(self, extra: int, colour: int) -> "EdgeColouring":
        """Add ``extra`` vertices joined to everything (and each other) in ``colour``."""
        n = self.n
        return EdgeColouring.from_function(
            n + extra, self.r, lambda u, v: self.colour(u, v) if v < n else colour
        )

    def to_json(self) -> str:
        """Canonical byte-stable JSON: ``{"n","r","edges":[[u,v,c],...]}``."""
        return json.dumps({"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges()]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "EdgeColouring":
        data = json.loads(text)
        n, r = int(data["n"]), int(data["r"])
        table = {}
        for u, v, c in data["edges"]:
            u, v = (u, v) if u < v else (v, u)
            if (u, v) in table:
                raise ValueError(f"pair {u},{v} listed twice")
            table[(u, v)] = c
        if len(table) != n * (n - 1) // 2:
            raise ValueError("colouring JSON does not cover every pair")
        return cls.from_function(n, r, lambda u, v: table[(u, v)])


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices; ``mapping[i]`` is the image of i."""

    mapping: tuple[int, ...]
    colour: int | None = None

    def to_json(self) -> list[list[int]]:
        return [[p, h] for p, h in enumerate(self.mapping)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], colour: int | None = None) -> "Embedding":
        table = dict((int(p), int(h)) for p, h in pairs)
        return cls(tuple(table[i] for i in range(len(table))), colour)


def validate_embedding(
    pattern: Graph, mapping: Sequence[int], host: Graph | EdgeColouring, colour: int | None = None
) -> bool:
    """Check a claimed copy edge by edge against the host.

    Deliberately naive: it shares no code with the search routines it checks.
    """
    if len(mapping) != pattern.n or len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= h < host.n for h in mapping):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if not pattern.has_edge(a, b):
                continue
            x, y = mapping[a], mapping[b]
            if isinstance(host, EdgeColouring):
                if colour is None or host.colour(x, y) != colour:
                    return False
            elif not host.has_edge(x, y):
                return False
    return True

