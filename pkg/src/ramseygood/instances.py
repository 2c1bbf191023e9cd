"""Random planted instances for the embedding routines and pipeline fuzzing.

Every generator takes a ``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .colouring import BLUE, RED, EdgeColouring
from .constructions import burr_colouring
from .embeddings import BlowupInstance
from .graph import Graph, complete_graph, complete_multipartite, cycle_graph, path_power
from .invariants import chromatic_number, sigma


@dataclass(frozen=True)
class BlowupCase:
    instance: BlowupInstance
    H: Graph
    placement: tuple[int, ...]


@dataclass(frozen=True)
class SwapCase:
    F: Graph
    J: Graph
    Delta: int
    eps: Fraction


@dataclass(frozen=True)
class GreedyCase:
    H: Graph
    n: int
    k: int
    eps: Fraction


def random_colouring(rng: random.Random, n: int, p_red: float = 0.5) -> EdgeColouring:
    return EdgeColouring.from_function(n, 2, lambda u, v: RED if rng.random() < p_red else BLUE)


def shuffled(col: EdgeColouring, rng: random.Random) -> EdgeColouring:
    perm = list(range(col.n))
    rng.shuffle(perm)
    return EdgeColouring.from_function(col.n, col.r, lambda u, v: col.colour(perm[u], perm[v]))


def flip_some(col: EdgeColouring, rng: random.Random, flips: int) -> EdgeColouring:
    pairs = [(u, v) for u in range(col.n) for v in range(u + 1, col.n)]
    chosen = set(rng.sample(pairs, min(flips, len(pairs))))
    return EdgeColouring.from_function(
        col.n, 2, lambda u, v: 1 - col.colour(u, v) if (min(u, v), max(u, v)) in chosen else col.colour(u, v)
    )


def _bounded_degree_graph(rng: random.Random, n: int, d: int, p: float) -> Graph:
    deg = [0] * n
    edges = []
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if deg[u] < d and deg[v] < d and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def planted_blowup(rng: random.Random, r: int) -> BlowupCase:
    """Parts with arbitrary red inside and red K_{r,r}-free crossings.

    For r = 1 the crossing pairs are all blue; for r = 2 each crossing carries
    a random red partial matching.  H is a bounded-degree graph properly
    coloured into the parts.
    """
    t = rng.randint(2, 4)
    q = rng.randint(8, 14)
    N = t * q
    part_of = [v // q for v in range(N)]
    cross_red: set[tuple[int, int]] = set()
    if r == 2:
        for i in range(t):
            for j in range(i + 1, t):
                left = list(range(i * q, (i + 1) * q))
                right = list(range(j * q, (j + 1) * q))
                rng.shuffle(right)
                for a, b in zip(left, right):
                    if rng.random() < 0.5:
                        cross_red.add((a, b))

    def colour(u: int, v: int) -> int:
        if part_of[u] == part_of[v]:
            return RED if rng.random() < 0.5 else BLUE
        return RED if (min(u, v), max(u, v)) in cross_red else BLUE

    col = EdgeColouring.from_function(N, 2, colour)
    parts = [range(i * q, (i + 1) * q) for i in range(t)]
    n_h = rng.randint(2, min(8, t * q // 2))
    d = rng.randint(1, 3)
    H = _bounded_degree_graph(rng, n_h, d, 0.6)
    # proper placement: greedy with a random order, at most q // 2 per part
    placement = [-1] * n_h
    load = [0] * t
    for x in rng.sample(range(n_h), n_h):
        options = [
            i for i in range(t)
            if load[i] < q // 2 and all(placement[y] != i for y in H.neighbours(x))
        ]
        if not options:
            # drop the edges that block x rather than fail the case
            H = Graph.from_edges(n_h, [(a, b) for a, b in H.edges() if x not in (a, b)])
            options = [i for i in range(t) if load[i] < q // 2]
        placement[x] = rng.choice(options)
        load[placement[x]] += 1
    inst = BlowupInstance.make(col, parts, r=r, d=max(H.max_degree(), 1))
    return BlowupCase(inst, H, tuple(placement))


def planted_swap(rng: random.Random) -> SwapCase:
    """K_n minus a perfect matching, a few extra deletions, J of maximum degree 2.

    Parameters satisfy every precondition of the swap embedding: Delta = 2,
    eps = 1/9, n = 18 or 36, at most eps n vertices of degree below
    (1 - 2 eps) n, minimum degree at least 3 Delta eps n.
    """
    n = rng.choice([18, 36])
    eps = Fraction(1, 9)
    Delta = 2
    verts = list(range(n))
    rng.shuffle(verts)
    removed = {(min(a, b), max(a, b)) for a, b in zip(verts[::2], verts[1::2])}
    # up to eps n "low" vertices lose extra edges
    low = rng.sample(range(n), rng.randint(0, int(eps * n)))
    floor_deg = 3 * Delta * eps * n
    base = complete_graph(n)
    for v in low:
        others = [u for u in range(n) if u != v and (min(u, v), max(u, v)) not in removed]
        rng.shuffle(others)
        extra = rng.randint(1, int(n - 2 - floor_deg))
        for u in others[:extra]:
            removed.add((min(u, v), max(u, v)))
    F = Graph.from_edges(n, [e for e in base.edges() if e not in removed])
    # restore degree floor and the low-vertex budget if extra deletions overshot
    while True:
        degs = F.degrees()
        bad = [v for v in range(n) if degs[v] < floor_deg]
        lows = [v for v in range(n) if degs[v] < (1 - 2 * eps) * n]
        if not bad and len(lows) <= eps * n:
            break
        v = bad[0] if bad else next(v for v in lows if v not in low)
        u = rng.choice([u for u in range(n) if u != v and not F.has_edge(u, v)])
        F = Graph.from_edges(n, F.edges() + [(min(u, v), max(u, v))])
    J = _random_max_degree_two(rng, n)
    return SwapCase(F, J, Delta, eps)


def _random_max_degree_two(rng: random.Random, n: int) -> Graph:
    # a random disjoint union of cycles and paths covering all n vertices
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    i = 0
    while i < n:
        size = min(rng.randint(1, n), n - i)
        piece = order[i:i + size]
        edges += [(min(a, b), max(a, b)) for a, b in zip(piece, piece[1:])]
        if size >= 3 and rng.random() < 0.5:
            edges.append((min(piece[0], piece[-1]), max(piece[0], piece[-1])))
        i += size
    return Graph.from_edges(n, edges)


def planted_greedy(rng: random.Random) -> GreedyCase:
    """Near-complete host whose complement is a forest of short paths.

    k = 1 with eps = 1/4 and n = 49, or k = 2 with eps = 1/5 and n = 76;
    the host has n + (k+2) eps n vertices (rounded up) plus a random margin.
    """
    if rng.random() < 0.5:
        k, eps, n = 1, Fraction(1, 4), 49
    else:
        k, eps, n = 2, Fraction(1, 5), 76
    need = n + (k + 2) * eps * n
    N = int(need) + (need.denominator != 1) + rng.randint(0, 6)
    # complement: vertex-disjoint paths on at most 3 vertices, so no cycles at all
    order = list(range(N))
    rng.shuffle(order)
    missing = set()
    i = 0
    while i < N:
        size = rng.randint(1, 3)
        piece = order[i:i + size]
        missing |= {(min(a, b), max(a, b)) for a, b in zip(piece, piece[1:])}
        i += size
    H = Graph.from_edges(N, [e for e in complete_graph(N).edges() if e not in missing])
    return GreedyCase(H, n, k, eps)


@dataclass(frozen=True)
class FuzzCase:
    """A colouring plus pipeline parameters.

    ``extremal`` marks an unperturbed (relabelled) lower-bound colouring for
    red connected n-vertex targets against blue H; no pipeline may find a
    witness there.
    """

    colouring: EdgeColouring
    H: Graph
    n: int
    k: int
    extremal: bool


# small H with (chi, sigma) in {(2,1), (3,1), (2,2), (3,2)}
FUZZ_TARGETS = (
    complete_graph(2),
    complete_graph(3),
    complete_multipartite([2, 2]),
    path_power(6, 2),
    cycle_graph(5),
)


def fuzz_case(rng: random.Random) -> FuzzCase:
    """Uniform, skewed, extremal or perturbed-extremal colouring on at most 14 vertices."""
    H = rng.choice(FUZZ_TARGETS)
    kind = rng.randrange(4)
    if kind < 2:
        n, k = rng.randint(3, 6), rng.randint(1, 2)
        p = 0.5 if kind == 0 else rng.choice([0.15, 0.85])
        return FuzzCase(random_colouring(rng, rng.randint(3, 11), p), H, n, k, False)
    chi, sig = chromatic_number(H), sigma(H)
    n = rng.randint(max(3, sig + 1), 6)
    col = shuffled(burr_colouring(chi, sig, n), rng)
    if kind == 3:
        col = flip_some(col, rng, rng.randint(1, 3))
    # with k = chi - 1 a blue P^k_n also has chromatic number chi
    return FuzzCase(col, H, n, chi - 1, kind == 2)
