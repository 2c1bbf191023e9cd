"""Explicit lower-bound colourings and the checker for their avoidance claims.

Block layouts are consecutive index ranges in a fixed order
(A_1..A_k, B_1..B_k, C), so every colouring here is byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .colouring import BLUE, RED, Embedding, EdgeColouring
from .graph import Graph
from .match import contains_subgraph


def _layout(blocks: list[tuple[str, int]]) -> dict[str, range]:
    out = {}
    start = 0
    for label, size in blocks:
        out[label] = range(start, start + size)
        start += size
    return out


def _owner(layout: dict[str, range]) -> list[str]:
    owner = [""] * sum(len(r) for r in layout.values())
    for label, r in layout.items():
        for v in r:
            owner[v] = label
    return owner


# -- Burr / Chvatal-Harary ---------------------------------------------------

def burr_layout(chi: int, sigma: int, n: int) -> dict[str, range]:
    if chi < 1 or sigma < 1 or n <= sigma:
        raise ValueError("need chi >= 1, sigma >= 1 and n > sigma")
    blocks = [(f"Q{i + 1}", n - 1) for i in range(chi - 1)]
    if sigma > 1:
        blocks.append(("S", sigma - 1))
    return _layout(blocks)


def burr_colouring(chi: int, sigma: int, n: int) -> EdgeColouring:
    """Red cliques: chi-1 of order n-1 and one of order sigma-1; blue between them.

    Has no red copy of any connected n-vertex graph and no blue copy of any
    graph with chromatic number chi and sigma-value sigma.
    """
    owner = _owner(burr_layout(chi, sigma, n))
    return EdgeColouring.from_function(len(owner), 2, lambda u, v: RED if owner[u] == owner[v] else BLUE)


def chvatal_harary_colouring(chi: int, n: int) -> EdgeColouring:
    """The sigma = 1 case: chi-1 red cliques of order n-1 joined in blue."""
    return burr_colouring(chi, 1, n)


# -- powers of paths ---------------------------------------------------------

@dataclass(frozen=True)
class JGadget:
    """Red/blue colouring of K_{k,k} with parts a_1..a_k and b_1..b_k.

    ``colour[i][j]`` is the colour of ``a_i b_j``.
    """

    k: int
    colour: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.colour) != self.k or any(len(row) != self.k for row in self.colour):
            raise ValueError("gadget colour table must be k x k")
        if any(c not in (RED, BLUE) for row in self.colour for c in row):
            raise ValueError("gadget colours must be red or blue")
        for i in range(self.k):
            if BLUE not in self.colour[i]:
                raise ValueError(f"a_{i + 1} has no blue edge")
            if RED not in (row[i] for row in self.colour):
                raise ValueError(f"b_{i + 1} has no red edge")

    def blue_degree(self, i: int) -> int:
        return sum(1 for c in self.colour[i] if c == BLUE)

    def red_degree(self, j: int) -> int:
        return sum(1 for row in self.colour if row[j] == RED)


def standard_gadget(k: int) -> JGadget:
    """Red matching a_i b_i, blue elsewhere: reproduces the basic construction."""
    return JGadget(k, tuple(tuple(RED if i == j else BLUE for j in range(k)) for i in range(k)))


def all_gadgets(k: int) -> Iterator[JGadget]:
    for cells in product((RED, BLUE), repeat=k * k):
        table = tuple(tuple(cells[i * k:(i + 1) * k]) for i in range(k))
        try:
            yield JGadget(k, table)
        except ValueError:
            continue


def j_gadget_layout(gadget: JGadget, t: int) -> dict[str, range]:
    if t < 1:
        raise ValueError("need t >= 1")
    k = gadget.k
    blocks = [(f"A{i + 1}", (gadget.blue_degree(i) + 1) * t - 1) for i in range(k)]
    blocks += [(f"B{j + 1}", (gadget.red_degree(j) + 1) * t - 1) for j in range(k)]
    blocks.append(("C", t - 1))
    return _layout(blocks)


def _block_pattern(layout: dict[str, range], cross, c_colour) -> EdgeColouring:
    owner = _owner(layout)

    def colour(u: int, v: int) -> int:
        a, b = owner[u], owner[v]
        if a == "C" and b == "C":
            return c_colour(u, v)
        if a == "C" or b == "C":
            other = b if a == "C" else a
            return BLUE if other[0] == "A" else RED
        if a == b:
            return RED if a[0] == "A" else BLUE
        if a[0] == b[0]:
            return BLUE if a[0] == "A" else RED
        ai, bj = (a, b) if a[0] == "A" else (b, a)
        return cross(int(ai[1:]) - 1, int(bj[1:]) - 1)

    return EdgeColouring.from_function(len(owner), 2, colour)


def _c_rule(c_mode: str, seed: int | None):
    if c_mode == "red":
        return lambda u, v: RED
    if c_mode == "blue":
        return lambda u, v: BLUE
    if c_mode == "random":
        rng = random.Random(seed)
        table: dict = {}
        return lambda u, v: table.setdefault((u, v), rng.randrange(2))
    raise ValueError(f"unknown C-block mode {c_mode!r}")


def j_gadget_colouring(gadget: JGadget, t: int, c_mode: str = "red", seed: int | None = None) -> EdgeColouring:
    """Two-colouring on t(k+1)^2 - 2k - 1 vertices built from a gadget.

    A_i has (blue degree of a_i + 1)t - 1 vertices, B_j has
    (red degree of b_j + 1)t - 1, C has t - 1.  A_i-B_j pairs take the
    gadget colour of a_i b_j.
    """
    return _block_pattern(j_gadget_layout(gadget, t), lambda i, j: gadget.colour[i][j], _c_rule(c_mode, seed))


def power_lower_layout(k: int, t: int) -> dict[str, range]:
    if k < 2 or t < 1:
        raise ValueError("need k >= 2 and t >= 1")
    return j_gadget_layout(standard_gadget(k), t)


def power_lower_colouring(k: int, t: int, c_mode: str = "red", seed: int | None = None) -> EdgeColouring:
    """No monochromatic P^k_{(k+1)t} on t(k+1)^2 - 2k - 1 vertices.

    k red blocks A_i of size kt-1, k blue blocks B_i of size 2t-1 and C of size
    t-1.  Inside C the colour is fixed by ``c_mode`` (red, blue or seeded random).
    """
    power_lower_layout(k, t)
    return j_gadget_colouring(standard_gadget(k), t, c_mode, seed)


def cycle_remainder_layout(k: int, t: int, rem: int) -> dict[str, range]:
    if k < 2 or t < 1 or not 1 <= rem <= k:
        raise ValueError("need k >= 2, t >= 1 and 1 <= rem <= k")
    blocks = [(f"A{i + 1}", k * t + rem - 1) for i in range(k + 1)]
    blocks += [(f"B{i + 1}", 2 * t + rem - 1) for i in range(k + 1)]
    blocks.append(("C", rem - 1))
    return _layout(blocks)


def cycle_remainder_colouring(k: int, t: int, rem: int, c_mode: str = "red", seed: int | None = None) -> EdgeColouring:
    """Colouring for C^k_{(k+1)t+rem}: k+1 blocks of each kind, same edge rules."""
    layout = cycle_remainder_layout(k, t, rem)
    return _block_pattern(layout, lambda i, j: RED if i == j else BLUE, _c_rule(c_mode, seed))


# -- Brown ---------------------------------------------------------------------

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def projective_points(p: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, p) as vectors whose first nonzero coordinate is 1."""
    pts = []
    for x, y, z in product(range(p), repeat=3):
        lead = next((c for c in (x, y, z) if c), 0)
        if lead == 1:
            pts.append((x, y, z))
    return pts


def brown_polarity_graph(p: int) -> Graph:
    """Orthogonality graph on the p^2+p+1 projective points; K_{2,2}-free.

    Self-orthogonal (absolute) points have degree p, all others p+1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pts = projective_points(p)
    edges = []
    for i, a in enumerate(pts):
        for j in range(i + 1, len(pts)):
            b = pts[j]
            if (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % p == 0:
                edges.append((i, j))
    return Graph.from_edges(len(pts), edges)


def brown_colouring(p: int) -> EdgeColouring:
    """Polarity-graph edges blue, non-edges red."""
    return EdgeColouring.from_graph(brown_polarity_graph(p))


# -- verification ----------------------------------------------------------------

@dataclass(frozen=True)
class AvoidanceReport:
    red_witness: Embedding | None
    blue_witness: Embedding | None

    @property
    def verified(self) -> bool:
        return self.red_witness is None and self.blue_witness is None

    def to_dict(self) -> dict:
        return {
            "verified": self.verified,
            "red_witness": None if self.red_witness is None else self.red_witness.to_json(),
            "blue_witness": None if self.blue_witness is None else self.blue_witness.to_json(),
        }


def verify_avoidance(col: EdgeColouring, red_target: Graph, blue_target: Graph) -> AvoidanceReport:
    """Exhaustively look for a red ``red_target`` and a blue ``blue_target``."""
    if col.r != 2:
        raise ValueError("avoidance is checked for two-colourings only")
    red = contains_subgraph(col.red, red_target)
    blue = contains_subgraph(col.blue, blue_target)
    return AvoidanceReport(
        None if red is None else Embedding(red.mapping, RED),
        None if blue is None else Embedding(blue.mapping, BLUE),
    )
