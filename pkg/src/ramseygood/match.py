"""Backtracking search for (non-induced) copies and homomorphisms of a pattern.

The host is given as raw bitset rows so the Ramsey engine can call this on
partial colourings without building ``Graph`` objects.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graph import Graph, bits, popcount


@lru_cache(maxsize=4096)
def _plan(pattern: Graph, fixed: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Vertex order plus, for each position, the earlier positions adjacent to it.

    Fixed vertices come first; the rest are added greedily by most already-placed
    neighbours, then by degree, then by lowest index.
    """
    order = list(fixed)
    placed = set(fixed)
    deg = pattern.degrees()
    while len(order) < pattern.n:
        best = None
        for v in range(pattern.n):
            if v in placed:
                continue
            key = (sum(1 for u in order if pattern.has_edge(u, v)), deg[v], -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])
    pos = {v: i for i, v in enumerate(order)}
    back = tuple(tuple(sorted(pos[u] for u in pattern.neighbours(v) if pos[u] < pos[v])) for v in order)
    return tuple(order), back


def find_copy(
    host_adj: Sequence[int],
    host_mask: int,
    pattern: Graph,
    *,
    injective: bool = True,
    fixed: dict[int, int] | None = None,
    degree_filter: bool = True,
) -> tuple[int, ...] | None:
    """Map pattern vertex ``i`` to ``result[i]`` preserving edges, or return None.

    ``host_mask`` restricts the usable host vertices.  ``fixed`` pins some
    pattern vertices to host vertices before the search starts.  Candidates are
    tried lowest index first, so results are deterministic.
    """
    p = pattern.n
    if p == 0:
        return ()
    fixed = fixed or {}
    order, back = _plan(pattern, tuple(fixed))
    image = [0] * p
    used = 0
    for i, v in enumerate(order[: len(fixed)]):
        h = fixed[v]
        if not (host_mask >> h) & 1:
            return None
        if injective and (used >> h) & 1:
            return None
        for j in back[i]:
            if not (host_adj[image[j]] >> h) & 1:
                return None
        image[i] = h
        used |= 1 << h

    if injective and degree_filter:
        pdeg = pattern.degrees()
        need = [pdeg[v] for v in order]
        degmask = {}
        for d in set(need):
            m = 0
            for h in bits(host_mask):
                if popcount(host_adj[h] & host_mask) >= d:
                    m |= 1 << h
            degmask[d] = m
        allowed = [degmask[d] for d in need]
    else:
        allowed = [host_mask] * p

    start = len(fixed)

    def extend(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = allowed[i]
        for j in back[i]:
            cand &= host_adj[image[j]]
        if injective:
            cand &= ~used
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(start, used):
        return None
    result = [0] * p
    for i, v in enumerate(order):
        result[v] = image[i]
    return tuple(result)


def find_copy_through(
    host_adj: Sequence[int],
    host_mask: int,
    pattern: Graph,
    u: int,
    v: int,
    arcs: Sequence[tuple[int, int]],
    *,
    injective: bool = True,
) -> tuple[int, ...] | None:
    """A copy whose image uses the host edge ``uv``.

    ``arcs`` lists pattern arcs ``(a, b)`` to try as ``a -> u, b -> v``; passing
    one representative per arc orbit of the pattern's automorphism group
    (see :func:`arc_orbit_representatives`) is enough.
    """
    for a, b in arcs:
        found = find_copy(
            host_adj, host_mask, pattern, injective=injective, fixed={a: u, b: v}, degree_filter=False
        )
        if found is not None:
            return found
    return None


def all_copies(host_adj: Sequence[int], host_mask: int, pattern: Graph) -> list[tuple[int, ...]]:
    """Every injective edge-preserving map (used for automorphisms of small patterns)."""
    p = pattern.n
    order, back = _plan(pattern, ())
    image = [0] * p
    out = []

    def extend(i: int, used: int):
        if i == p:
            res = [0] * p
            for k, w in enumerate(order):
                res[w] = image[k]
            out.append(tuple(res))
            return
        cand = host_mask & ~used
        for j in back[i]:
            cand &= host_adj[image[j]]
        for h in bits(cand):
            image[i] = h
            extend(i + 1, used | (1 << h))

    extend(0, 0)
    return out


@lru_cache(maxsize=1024)
def arc_orbit_representatives(pattern: Graph) -> tuple[tuple[int, int], ...]:
    """One arc ``(a, b)`` per orbit of ``Aut(pattern)`` acting on ordered edges."""
    # an injective edge-preserving self-map of a finite graph is an automorphism
    autos = all_copies(pattern.adj, pattern.vertex_mask, pattern)
    seen: set[tuple[int, int]] = set()
    reps = []
    for a, b in pattern.edges():
        for arc in ((a, b), (b, a)):
            if arc in seen:
                continue
            reps.append(arc)
            for g in autos:
                seen.add((g[arc[0]], g[arc[1]]))
    return tuple(reps)



def contains_subgraph(host: Graph, pattern: Graph):
    """A (not necessarily induced) copy of ``pattern`` in ``host`` as an Embedding, or None."""
    from .colouring import Embedding

    found = find_copy(host.adj, host.vertex_mask, pattern)
    return None if found is None else Embedding(found)
