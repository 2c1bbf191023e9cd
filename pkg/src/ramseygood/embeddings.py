"""Three constructive embedding algorithms.

* ``blowup_embed``: allowed-set greedy embedding of a bounded-degree graph
  into the blue graph between parts with no red K_{r,r};
* ``swap_embed``: spanning embedding into a near-complete host, repaired by
  swapping images until no pattern edge is missing;
* ``greedy_power_embed``: greedy P^k_n into a graph whose complement has no
  long cycle.

Every threshold is compared in exact integer arithmetic.  The large-s
constants can be overridden so the algorithms run on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Mapping, Sequence

from .colouring import BLUE, Embedding, EdgeColouring
from .graph import Graph, bits, mask_of, popcount
from .invariants import contains_kss, has_cycle_at_least


class PreconditionError(ValueError):
    pass


class AllowedSetExhausted(RuntimeError):
    def __init__(self, vertex: int, step: int, reason: str):
        super().__init__(f"pattern vertex {vertex} at step {step}: {reason}")
        self.vertex = vertex
        self.step = step


class SwapStuck(RuntimeError):
    pass


class GreedyStuck(RuntimeError):
    def __init__(self, step: int):
        super().__init__(f"no free common neighbour at step {step}")
        self.step = step


def iroot(x: int, k: int) -> int:
    """Largest integer y with y**k <= x."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x < 2:
        return x
    y = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y ** k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


# -- allowed-set embedding ------------------------------------------------------------

@dataclass(frozen=True)
class BlowupInstance:
    colouring: EdgeColouring
    parts: tuple[frozenset[int], ...]
    r: int
    d: int
    s: int

    def __post_init__(self):
        if self.colouring.r != 2:
            raise ValueError("blow-up instances are two-coloured")
        if self.r < 1 or self.d < 0:
            raise ValueError("need r >= 1 and d >= 0")
        if self.s < self.d * self.d:
            raise ValueError("need s >= d^2")
        seen: set[int] = set()
        for part in self.parts:
            if len(part) > self.s:
                raise ValueError("a part is larger than s")
            if seen & part:
                raise ValueError("parts must be disjoint")
            if any(not 0 <= v < self.colouring.n for v in part):
                raise ValueError("part vertex out of range")
            seen |= part

    @classmethod
    def make(cls, colouring: EdgeColouring, parts: Sequence, r: int, d: int, s: int | None = None) -> "BlowupInstance":
        parts = tuple(frozenset(p) for p in parts)
        if s is None:
            s = max([len(p) for p in parts] + [d * d])
        return cls(colouring, parts, r, d, s)


def default_reduction(r: int, s: int, d: int) -> int:
    """floor(4 r^2 s^((2r-1)/2r) (d+1)), exactly."""
    c = 4 * r * r * (d + 1)
    return iroot(c ** (2 * r) * s ** (2 * r - 1), 2 * r)


def _above_default_floor(size: int, r: int, s: int) -> bool:
    # size > p s / 2 = 2 r^2 s^((2r-1)/2r)
    return size ** (2 * r) > (2 * r * r) ** (2 * r) * s ** (2 * r - 1)


def _meets_default_rule(miss: int, size: int, r: int, s: int) -> bool:
    # miss <= p |A| with p = 4 r^2 s^(-1/2r)
    return miss ** (2 * r) * s <= (4 * r * r * size) ** (2 * r)


def auxiliary_reduced_graph(inst: BlowupInstance, reduction: int | None = None) -> tuple[Graph, tuple[int, ...]]:
    """Graph on the t parts (i ~ j iff no red K_{r,r} between V_i and V_j) and the reduced sizes."""
    red = inst.colouring.red
    t = len(inst.parts)
    edges = []
    for i in range(t):
        for j in range(i + 1, t):
            if contains_kss(red, inst.parts[i], inst.parts[j], inst.r) is None:
                edges.append((i, j))
    cut = default_reduction(inst.r, inst.s, inst.d) if reduction is None else reduction
    sizes = tuple(max(len(p) - cut, 0) for p in inst.parts)
    return Graph.from_edges(t, edges), sizes


def blowup_embed(
    inst: BlowupInstance,
    H: Graph,
    placement: Mapping[int, int] | Sequence[int],
    p: Fraction | None = None,
    floor: int | None = None,
    reduction: int | None = None,
) -> Embedding:
    """Blue copy of H with pattern vertex x placed in part ``placement[x]``.

    Vertices are embedded in index order.  Each goes to the lowest vertex of
    its allowed set that is blue-adjacent to at least (1-p)|A| of the allowed
    set A of every later neighbour.  ``p``, ``floor`` (allowed sets of later
    vertices must stay larger than it) and ``reduction`` default to the
    large-s values 4r^2 s^(-1/2r), ps/2 and the part-size cut.
    """
    col = inst.colouring
    r, s = inst.r, inst.s
    place = [placement[x] for x in range(H.n)]
    if H.max_degree() > inst.d:
        raise PreconditionError("H has a vertex of degree above d")
    aux, sizes = auxiliary_reduced_graph(inst, reduction)
    load = [0] * len(inst.parts)
    for x in range(H.n):
        if not 0 <= place[x] < len(inst.parts):
            raise PreconditionError(f"pattern vertex {x} placed in a missing part")
        load[place[x]] += 1
    for i, (a, b) in enumerate(zip(load, sizes)):
        if a > b:
            raise PreconditionError(f"part {i} gets {a} pattern vertices but has reduced size {b}")
    for x, y in H.edges():
        if not aux.has_edge(place[x], place[y]):
            raise PreconditionError(f"edge {x}{y} is placed on a non-edge of the reduced graph")

    blue = col.layers[BLUE]
    allowed = [mask_of(inst.parts[place[x]]) for x in range(H.n)]
    image = [0] * H.n

    def size_ok(size: int) -> bool:
        if floor is not None:
            return size > floor
        return _above_default_floor(size, r, s)

    def rule_ok(miss: int, size: int) -> bool:
        if p is None:
            return _meets_default_rule(miss, size, r, s)
        return miss <= p * size

    for t in range(H.n):
        later = [y for y in bits(H.adj[t]) if y > t]
        chosen = None
        for v in bits(allowed[t]):
            if all(rule_ok(popcount(allowed[y] & ~blue[v]), popcount(allowed[y])) for y in later):
                chosen = v
                break
        if chosen is None:
            raise AllowedSetExhausted(t, t, "no allowed vertex meets the blue-degree rule")
        image[t] = chosen
        for y in range(t + 1, H.n):
            if (H.adj[t] >> y) & 1:
                allowed[y] &= blue[chosen]
            else:
                allowed[y] &= ~(1 << chosen)
            if not size_ok(popcount(allowed[y])):
                raise AllowedSetExhausted(y, t + 1, "allowed set fell to the floor")
    return Embedding(tuple(image), BLUE)


def blowup_power_placement(n: int, k: int, q: int) -> list[int]:
    """Place P^k_n into the blow-up of P^k_t with parts of q pattern vertices.

    Pattern vertices come in blocks of (k+1)q consecutive vertices; block b
    uses aux vertices (k+1)b .. (k+1)b+k, and vertex j goes to
    (k+1)b + (j mod (k+1)).  Consecutive pattern vertices within distance k
    then land on distinct aux vertices within distance k.
    """
    if k < 1 or q < 1:
        raise ValueError("need k >= 1 and q >= 1")
    return [(k + 1) * (j // ((k + 1) * q)) + j % (k + 1) for j in range(n)]


# -- swap embedding -----------------------------------------------------------------------

@dataclass
class SwapTrace:
    """Bad-edge count before each swap round and after the last one."""

    bad_counts: list[int] = field(default_factory=list)
    swaps: list[tuple[int, int]] = field(default_factory=list)


def _check_swap(F: Graph, J: Graph, Delta: int, eps: Fraction) -> None:
    n = F.n
    if J.n != n:
        raise PreconditionError("host and pattern need the same order")
    if J.max_degree() > Delta:
        raise PreconditionError("pattern degree above Delta")
    if not 0 < eps < Fraction(1, Delta * Delta + 4):
        raise PreconditionError("need 0 < eps < 1/(Delta^2+4)")
    if F.min_degree() < 3 * Delta * eps * n:
        raise PreconditionError("host minimum degree below 3 Delta eps n")
    low = sum(1 for d in F.degrees() if d < (1 - 2 * eps) * n)
    if low > eps * n:
        raise PreconditionError("more than eps n host vertices of low degree")


def swap_embed_traced(
    F: Graph, J: Graph, Delta: int, eps: Fraction, check: bool = True
) -> tuple[Embedding, SwapTrace]:
    """Embed J into F, |J| = |F|, and return the swap trace as well."""
    eps = Fraction(eps)
    if check:
        _check_swap(F, J, Delta, eps)
    elif J.n != F.n:
        raise PreconditionError("host and pattern need the same order")
    n = F.n
    low = [v for v, d in enumerate(F.degrees()) if d < (1 - 2 * eps) * n]

    # pairwise at distance >= 3 in J, chosen greedily in vertex order
    I: list[int] = []
    blocked = 0
    for v in range(n):
        if len(I) == len(low):
            break
        if (blocked >> v) & 1:
            continue
        I.append(v)
        # exclude everything within distance 2 of v
        blocked |= J.adj[v] | (1 << v)
        for u in bits(J.adj[v]):
            blocked |= J.adj[u]
    if len(I) < len(low):
        raise SwapStuck(f"only {len(I)} far-apart pattern vertices for {len(low)} low-degree host vertices")

    psi = [-1] * n
    used = 0
    for x, y in zip(I, low):
        psi[x] = y
        used |= 1 << y
    fixed = mask_of(I)
    gamma = 0
    for x in I:
        gamma |= J.adj[x]
    for x in bits(gamma):
        cand = F.vertex_mask & ~used
        for v in bits(J.adj[x] & fixed):
            cand &= F.adj[psi[v]]
        if not cand:
            raise SwapStuck(f"cannot place neighbour {x} of the far-apart set")
        y = (cand & -cand).bit_length() - 1
        psi[x] = y
        used |= 1 << y
        fixed |= 1 << x

    free = [v for v in range(n) if not (used >> v) & 1]
    rest = [x for x in range(n) if psi[x] < 0]
    for x, y in zip(rest, free):
        psi[x] = y

    def bad_edges() -> list[tuple[int, int]]:
        return [(a, b) for a, b in J.edges() if not F.has_edge(psi[a], psi[b])]

    trace = SwapTrace()
    bad = bad_edges()
    trace.bad_counts.append(len(bad))
    while bad:
        a, b = bad[0]
        if (fixed >> b) & 1:
            a, b = b, a
        if (fixed >> b) & 1:
            raise SwapStuck(f"bad edge {a}{b} inside the fixed part")
        need = F.vertex_mask
        for v in bits(J.adj[b]):
            need &= F.adj[psi[v]]
        c = None
        for cand in range(n):
            if (fixed >> cand) & 1 or cand == b or not (need >> psi[cand]) & 1:
                continue
            if all(F.has_edge(psi[v], psi[b]) for v in bits(J.adj[cand])):
                c = cand
                break
        if c is None:
            raise SwapStuck(f"no swap partner for {b} (bad edge {a}{b})")
        psi[b], psi[c] = psi[c], psi[b]
        trace.swaps.append((b, c))
        bad = bad_edges()
        if len(bad) >= trace.bad_counts[-1]:
            raise SwapStuck("swap did not reduce the bad-edge count")
        trace.bad_counts.append(len(bad))
    return Embedding(tuple(psi)), trace


def swap_embed(F: Graph, J: Graph, Delta: int, eps: Fraction, check: bool = True) -> Embedding:
    """Spanning embedding of J into F.

    Low-degree host vertices take a set of pattern vertices at pairwise
    distance >= 3; their neighbourhoods are placed greedily; the rest is an
    arbitrary bijection, repaired by swapping the images of b and a suitable
    c for each missing edge ab.  Lowest index wins every choice.
    """
    return swap_embed_traced(F, J, Delta, eps, check)[0]


# -- greedy power-of-path embedding ----------------------------------------------------------

def _check_greedy(H: Graph, n: int, k: int, eps: Fraction) -> None:
    if not 0 < eps <= Fraction(1, k + 3):
        raise PreconditionError("need 0 < eps <= 1/(k+3)")
    if n <= 3 / (eps * eps):
        raise PreconditionError("need n > 3/eps^2")
    if H.n < n + (k + 2) * eps * n:
        raise PreconditionError("host has fewer than n + (k+2) eps n vertices")
    if has_cycle_at_least(H.complement(), ceil(eps * eps * n)):
        raise PreconditionError("complement has a cycle of length at least eps^2 n")


def greedy_power_embed(H: Graph, n: int, k: int, eps: Fraction, check: bool = True) -> Embedding:
    """Embed P^k_n into H greedily.

    Only vertices whose complement-degree is below eps n are used; each new
    path vertex is the lowest unused one adjacent to the previous k.
    """
    eps = Fraction(eps)
    if check:
        _check_greedy(H, n, k, eps)
    comp = H.complement()
    good = mask_of(v for v in range(H.n) if comp.degree(v) < eps * n)
    image: list[int] = []
    used = 0
    for j in range(n):
        cand = good & ~used
        for v in image[max(0, j - k):]:
            cand &= H.adj[v]
        if not cand:
            raise GreedyStuck(j)
        y = (cand & -cand).bit_length() - 1
        image.append(y)
        used |= 1 << y
    return Embedding(tuple(image))
