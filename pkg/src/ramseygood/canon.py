"""Canonical labelling of graphs and edge-coloured complete graphs.

A structure is a vertex count plus one or more symmetric relations
("layers"), each given as bitset rows.  For an r-colouring of K_n the
layers are the colour classes 1..r-1 (colour 0 is whatever is left).

The labelling is the minimum leaf certificate of an individualisation /
refinement search tree, with orbit pruning from automorphisms discovered
along the way.  Isomorphic inputs give identical certificates.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph, bits

Layers = tuple[tuple[int, ...], ...]


def _refine(cells: list[int], layers: Layers) -> list[int]:
    while True:
        out = []
        split = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                key = tuple((row[v] & c).bit_count() for row in layers for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


def _certificate(order: Sequence[int], layers: Layers) -> tuple[tuple[int, ...], ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for rows in layers:
        new = []
        for v in order:
            r = 0
            for u in bits(rows[v]):
                r |= 1 << pos[u]
            new.append(r)
        cert.append(tuple(new))
    return tuple(cert)


def canonical_labelling(
    n: int, layers: Layers, partition: Sequence[int] | None = None
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Return ``(certificate, order)``; ``order[i]`` is the vertex placed at position i.

    ``partition`` is an optional ordered list of vertex masks that isomorphisms
    must respect (cell order matters).
    """
    if n == 0:
        return tuple(() for _ in layers), ()
    cells = list(partition) if partition is not None else [(1 << n) - 1]
    cells = [c for c in cells if c]
    best: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def search(cells: list[int], seq: tuple[int, ...]):
        idx = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if idx is None:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(order, layers)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                g = [0] * n
                for a, b in zip(order, best[1]):
                    g[a] = b
                autos.append(tuple(g))
            return
        target = cells[idx]
        tried: list[int] = []
        for v in bits(target):
            if tried and _same_orbit(v, tried, autos, seq, n):
                continue
            tried.append(v)
            nxt = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            search(_refine(nxt, layers), seq + (v,))

    search(_refine(cells, layers), ())
    return best[0], tuple(best[1])


def _same_orbit(v: int, tried: list[int], autos: list[tuple[int, ...]], seq: tuple[int, ...], n: int) -> bool:
    gens = [g for g in autos if all(g[x] == x for x in seq)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[a] = b
    rv = find(v)
    return any(find(t) == rv for t in tried)


def graph_certificate(g: Graph, partition: Sequence[int] | None = None):
    return canonical_labelling(g.n, (g.adj,), partition)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labelling(g.n, (g.adj,))
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def colouring_certificate(n: int, layers: Layers, swap_colours: bool = False):
    """Certificate of an r-coloured K_n given its colour layers 1..r-1.

    With ``swap_colours`` (two colours only) the certificate is also invariant
    under exchanging the colours.
    """
    cert = canonical_labelling(n, layers)[0]
    if swap_colours:
        if len(layers) != 1:
            raise ValueError("colour swapping is only supported for two colours")
        full = (1 << n) - 1
        other = tuple(full & ~r & ~(1 << v) for v, r in enumerate(layers[0]))
        cert = min(cert, canonical_labelling(n, (other,))[0])
    return cert


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict = {}
    for parent in _graphs_on(n - 1):
        degs = parent.degrees()
        # the new vertex must be of minimum degree in the child
        for nbrs in range(1 << (n - 1)):
            d = nbrs.bit_count()
            if any(degs[u] + ((nbrs >> u) & 1) < d for u in range(n - 1)):
                continue
            adj = list(parent.adj)
            for u in bits(nbrs):
                adj[u] |= 1 << (n - 1)
            adj.append(nbrs)
            child = Graph(n, tuple(adj))
            cert, order = canonical_labelling(n, (child.adj,))
            if cert not in seen:
                perm = [0] * n
                for i, v in enumerate(order):
                    perm[v] = i
                seen[cert] = child.relabel(perm)
    return tuple(seen[c] for c in sorted(seen))


def all_graphs(n: int) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Each graph on n vertices is reached from the graph left after deleting one
    of its minimum-degree vertices; duplicates are rejected by certificate.
    """
    yield from _graphs_on(n)


def all_graphs_up_to(n: int) -> Iterator[Graph]:
    for m in range(n + 1):
        yield from _graphs_on(m)
