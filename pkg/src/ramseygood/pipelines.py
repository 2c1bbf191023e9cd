"""Stability decompositions and Ramsey upper-bound procedures as algorithms.

Each pipeline returns a ``PipelineOutcome``: a red or blue witness (always
re-validated edge by edge before it is returned), a partition, or an
undecided verdict with a reason.  The constants that only make sense for
huge n are parameters; the defaults are small-instance values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Sequence

from .colouring import BLUE, RED, Embedding, EdgeColouring, validate_embedding
from .embeddings import (
    AllowedSetExhausted,
    BlowupInstance,
    GreedyStuck,
    PreconditionError,
    SwapStuck,
    blowup_embed,
    blowup_power_placement,
    greedy_power_embed,
    swap_embed,
)
from .formats import to_graph6
from .graph import Graph, bits, complete_graph, mask_of, path_graph, path_power, popcount
from .invariants import chromatic_number, contains_kss, find_longest_cycle, max_clique_in, sigma, sigma_colouring
from .match import contains_subgraph


class LinkError(RuntimeError):
    """No disjoint red K_{k,k} between consecutive cliques."""


@dataclass
class PartitionResult:
    parts: list[frozenset[int]]
    leftover: frozenset[int]
    diagnostics: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "parts": [sorted(p) for p in self.parts],
            "leftover": sorted(self.leftover),
            "diagnostics": self.diagnostics,
        }


@dataclass
class CliqueCover:
    cliques: list[frozenset[int]]
    leftover: frozenset[int]


@dataclass
class AuxColouring:
    base: EdgeColouring
    clique_map: list[frozenset[int]]


@dataclass
class PipelineOutcome:
    tag: str  # red | blue | partition | undecided
    witness: Embedding | None = None
    pattern: Graph | None = None
    partition: PartitionResult | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.witness is not None:
            out["colour"] = self.witness.colour
            out["pattern"] = to_graph6(self.pattern)
            out["witness"] = self.witness.to_json()
        if self.partition is not None:
            out["partition"] = self.partition.to_dict()
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _witness(col: EdgeColouring, pattern: Graph, mapping: Sequence[int], colour: int) -> PipelineOutcome:
    mapping = tuple(mapping)
    if not validate_embedding(pattern, mapping, col, colour):
        raise RuntimeError("internal error: a witness failed validation")
    return PipelineOutcome("red" if colour == RED else "blue", Embedding(mapping, colour), pattern)


def _undecided(reason: str) -> PipelineOutcome:
    return PipelineOutcome("undecided", reason=reason)


def _need_two(col: EdgeColouring) -> None:
    if col.r != 2:
        raise ValueError("pipelines work on two-colourings")


def _diagnostics(col: EdgeColouring, parts: Sequence[frozenset[int]]) -> list[dict]:
    out = []
    masks = [mask_of(p) for p in parts]
    for i, p in enumerate(parts):
        blue_in = max((popcount(col.layers[BLUE][v] & masks[i]) for v in p), default=0)
        red_out = max(
            (popcount(col.layers[RED][v] & masks[j]) for v in p for j in range(len(parts)) if j != i),
            default=0,
        )
        out.append({"size": len(p), "max_blue_inside": blue_in, "max_red_to_other_part": red_out})
    return out


# -- red-component partition ----------------------------------------------------

def stability_partition(col: EdgeColouring, ell: int, n: int) -> PipelineOutcome:
    """Red P_n, blue K_ell, or the red components as ell-1 red cliques of size < n."""
    _need_two(col)
    red = col.red
    comps = red.components()
    problems = []
    if len(comps) > ell - 1:
        problems.append(f"{len(comps)} red components for {ell - 1} parts")
    if any(len(c) > n - 1 for c in comps):
        problems.append("a red component has at least n vertices")
    if any(not red.is_clique(c) for c in comps):
        problems.append("a red component is not a red clique")
    if not problems:
        return PipelineOutcome(
            "partition", partition=PartitionResult(comps, frozenset(), _diagnostics(col, comps))
        )
    path = contains_subgraph(red, path_graph(n))
    if path is not None:
        return _witness(col, path_graph(n), path.mapping, RED)
    clique = max_clique_in(col.blue, bound=ell)
    if len(clique) >= ell:
        return _witness(col, complete_graph(ell), sorted(clique)[:ell], BLUE)
    return _undecided("; ".join(problems) + "; no red P_n and no blue K_ell either")


# -- clique cover and the auxiliary colouring -----------------------------------------------

def clique_cover(col: EdgeColouring, s: int, colour: int = RED) -> CliqueCover:
    """Greedily split off s-cliques of one colour: largest clique first, its s lowest vertices."""
    if s < 1:
        raise ValueError("clique size must be positive")
    g = col.graph(colour)
    left = g.vertex_mask
    cliques = []
    while left:
        q = max_clique_in(g, within=left)
        if len(q) < s:
            break
        take = frozenset(sorted(q)[:s])
        cliques.append(take)
        left &= ~mask_of(take)
    return CliqueCover(cliques, frozenset(bits(left)))


def build_auxiliary(col: EdgeColouring, cover: CliqueCover, k: int, size: int | None = None, colour: int = RED) -> AuxColouring:
    """Cliques i, j get ``colour`` iff a ``colour`` K_{size,size} joins them (size defaults to 2k)."""
    size = 2 * k if size is None else size
    if any(len(q) < size for q in cover.cliques):
        raise ValueError(f"cliques must have at least {size} vertices")
    g = col.graph(colour)
    qs = cover.cliques
    m = len(qs)
    table = {}
    for i in range(m):
        for j in range(i + 1, m):
            joined = contains_kss(g, qs[i], qs[j], size) is not None
            table[(i, j)] = colour if joined else 1 - colour
    base = EdgeColouring.from_function(m, 2, lambda i, j: table[(i, j)])
    return AuxColouring(base, list(qs))


def aux_path_to_power(col: EdgeColouring, aux: AuxColouring, red_path: Sequence[int], k: int, colour: int = RED) -> Embedding:
    """Thread a ``colour`` P^k through the cliques along ``red_path``.

    Inside each clique the order is: vertices linked from the previous clique,
    free vertices, vertices linked to the next clique.  Links are vertex
    disjoint K_{k,k}s, so any k+1 consecutive vertices are pairwise joined.
    """
    g = col.graph(colour)
    qs = [aux.clique_map[i] for i in red_path]
    if not qs:
        return Embedding((), colour)
    ins: list[list[int]] = [[] for _ in qs]
    outs: list[list[int]] = [[] for _ in qs]
    for i in range(len(qs) - 1):
        avail = qs[i] - set(ins[i])
        link = contains_kss(g, avail, qs[i + 1], k)
        if link is None:
            raise LinkError(f"no K_{{{k},{k}}} from clique {red_path[i]} to {red_path[i + 1]}")
        outs[i], ins[i + 1] = sorted(link[0]), sorted(link[1])
        if set(outs[i]) & set(ins[i]):
            raise LinkError("links overlap inside a clique")
    order: list[int] = []
    for i, q in enumerate(qs):
        middle = sorted(q - set(ins[i]) - set(outs[i]))
        order += ins[i] + middle + outs[i]
    # cliques shorter than k let a window span three cliques; catch that here
    if not validate_embedding(path_power(len(order), k), order, col, colour):
        raise LinkError("threaded order is not a power of a path")
    return Embedding(tuple(order), colour)


# -- clique-cover decomposition ---------------------------------------------------------

@dataclass(frozen=True)
class Thresholds:
    """Small-instance stand-ins for the constants of the large-n arguments.

    ``foreign_red`` and ``own_blue`` are fractions of the relevant set sizes
    used by the two cleanup passes; ``p``, ``floor`` and ``reduction`` are
    handed to the allowed-set embedding.
    """

    foreign_red: Fraction | None = None  # default eps/2
    own_blue: Fraction | None = None  # default eps/2
    p: Fraction = Fraction(1, 2)
    floor: int = 0
    reduction: int = 0


def _default_n(N: int, H: Graph) -> int:
    chi, sig = chromatic_number(H), sigma(H)
    if chi < 2:
        return N
    return -(-(N - sig) // (chi - 1)) + 1


def _blue_H_in_cliques(
    col: EdgeColouring, H: Graph, cliques: list[frozenset[int]], r: int, th: Thresholds
) -> PipelineOutcome:
    """Blue H across cliques with no red K_{r,r} between them.

    Tries the allowed-set embedding first, then an exhaustive search.
    """
    colouring = sigma_colouring(H)
    chi = max(colouring, default=-1) + 1
    cliques = cliques[:chi]
    d = H.n - 1
    failure = ""
    try:
        inst = BlowupInstance.make(col, cliques, r=r, d=d, s=max(max(map(len, cliques)), d * d))
        emb = blowup_embed(inst, H, colouring, p=th.p, floor=th.floor, reduction=th.reduction)
        return _witness(col, H, emb.mapping, BLUE)
    except (AllowedSetExhausted, PreconditionError) as exc:
        failure = str(exc)
    verts = sorted(set().union(*cliques))
    found = contains_subgraph(col.blue.induced(verts), H)
    if found is not None:
        return _witness(col, H, [verts[i] for i in found.mapping], BLUE)
    return _undecided(f"blue auxiliary clique but no blue copy of H ({failure})")


def stability_decompose(
    col: EdgeColouring,
    H: Graph,
    k: int,
    s: int,
    eps: Fraction,
    n: int | None = None,
    thresholds: Thresholds = Thresholds(),
) -> PipelineOutcome:
    """Red P^k_n, blue H, or a partition V_1..V_{chi(H)-1}, L.

    Steps: red s-clique cover; auxiliary colouring on the cliques (red iff a
    red K_{2k,2k} joins them); partition of the auxiliary colouring against
    red P_m and blue K_chi; pull back to clusters; drop vertices with many
    red neighbours in a foreign cluster; drop vertices with many blue
    neighbours in their own cluster.
    """
    _need_two(col)
    eps = Fraction(eps)
    if k < 1 or s < 2 * k:
        raise ValueError("need k >= 1 and s >= 2k")
    if n is None:
        n = _default_n(col.n, H)
    chi = chromatic_number(H)
    target = path_power(n, k)
    cover = clique_cover(col, s)
    m = -(-n // s)
    if not cover.cliques:
        return _undecided("no red s-clique")
    aux = build_auxiliary(col, cover, k)
    star = stability_partition(aux.base, max(chi, 2), m)

    if star.tag == "red":
        try:
            emb = aux_path_to_power(col, aux, star.witness.mapping, k)
        except LinkError as exc:
            return _undecided(str(exc))
        return _witness(col, target, emb.mapping[:n], RED)
    if star.tag == "blue":
        picked = [aux.clique_map[i] for i in star.witness.mapping]
        return _blue_H_in_cliques(col, H, picked, 2 * k, thresholds)
    if star.tag == "undecided":
        return _undecided("auxiliary colouring: " + star.reason)

    clusters = [frozenset().union(*(aux.clique_map[i] for i in part)) for part in star.partition.parts]
    leftover = set(cover.leftover)

    foreign = eps / 2 if thresholds.foreign_red is None else thresholds.foreign_red
    own = eps / 2 if thresholds.own_blue is None else thresholds.own_blue
    red, blue = col.layers[RED], col.layers[BLUE]
    cmasks = [mask_of(c) for c in clusters]
    kept = []
    for i, c in enumerate(clusters):
        keep = set()
        for v in c:
            if all(popcount(red[v] & cmasks[j]) <= foreign * len(clusters[j]) for j in range(len(clusters)) if j != i):
                keep.add(v)
        leftover |= c - keep
        kept.append(keep)

    parts = []
    for keep in kept:
        limit = own * len(keep)
        cur = set(keep)
        while cur:
            cm = mask_of(cur)
            worst = max(sorted(cur), key=lambda v: popcount(blue[v] & cm))
            if popcount(blue[worst] & cm) <= limit:
                break
            cur.discard(worst)
            leftover.add(worst)
        parts.append(frozenset(cur))
    return PipelineOutcome(
        "partition", partition=PartitionResult(parts, frozenset(leftover), _diagnostics(col, parts))
    )


# -- power of a path versus H -------------------------------------------------------------

def _blue_multipartite(col: EdgeColouring, H: Graph, parts: list[frozenset[int]], S: list[int]) -> PipelineOutcome | None:
    colouring = sigma_colouring(H)
    chi = max(colouring, default=-1) + 1
    classes = [[x for x in range(H.n) if colouring[x] == c] for c in range(chi)]
    if chi - 1 > len(parts):
        return None
    blue = col.layers[BLUE]
    image = [-1] * H.n
    chosen = list(S)
    for x, v in zip(classes[chi - 1], S):
        image[x] = v
    for c in range(chi - 1):
        need = len(classes[c])
        cand = mask_of(parts[c])
        for v in chosen:
            cand &= blue[v]
        picks = list(bits(cand))[:need]
        if len(picks) < need:
            return None
        for x, v in zip(classes[c], picks):
            image[x] = v
        chosen += picks
    return _witness(col, H, image, BLUE)


def decide_power_vs_H(
    col: EdgeColouring,
    H: Graph,
    n: int,
    k: int,
    eps: Fraction,
    s: int | None = None,
    c_red: Fraction | None = None,
    require_size: bool = True,
    thresholds: Thresholds = Thresholds(),
) -> PipelineOutcome:
    """Red P^k_n or blue H on (chi(H)-1)(n-1)+sigma(H) vertices.

    After the decomposition, C_i collects leftover vertices with at least
    ``c_red`` (default 6 k eps n) red edges to V_i.  A part with
    |V_i + C_i| >= n gives a red P^k_n by the swap embedding; otherwise sigma(H)
    leftover vertices outside every C_i seed a greedy blue complete
    multipartite graph containing H.
    """
    _need_two(col)
    eps = Fraction(eps)
    chi, sig = chromatic_number(H), sigma(H)
    if require_size and col.n != (chi - 1) * (n - 1) + sig:
        raise ValueError(f"colouring has {col.n} vertices, expected {(chi - 1) * (n - 1) + sig}")
    target = path_power(n, k)
    if chi < 2:
        if H.n <= col.n:
            return _witness(col, H, range(H.n), BLUE)
        return _undecided("H has more vertices than the colouring")
    s = 2 * k if s is None else s
    out = stability_decompose(col, H, k, s, eps, n, thresholds)
    if out.tag != "partition":
        return out
    parts = out.partition.parts
    L = sorted(out.partition.leftover)
    red = col.layers[RED]
    c_red = 6 * k * eps * n if c_red is None else Fraction(c_red)
    C = [[v for v in L if popcount(red[v] & mask_of(p)) >= c_red] for p in parts]

    for p, extra in zip(parts, C):
        pool = sorted(p) + [v for v in extra if v not in p]
        if len(pool) < n:
            continue
        verts = pool[:n]
        F = col.red.induced(verts)
        try:
            emb = swap_embed(F, target, 2 * k, eps, check=False)
        except (SwapStuck, PreconditionError):
            found = contains_subgraph(F, target)
            if found is None:
                continue
            emb = found
        return _witness(col, target, [verts[i] for i in emb.mapping], RED)

    in_c = set().union(*map(set, C)) if C else set()
    # any sigma(H) of them will do; fewest red edges into the parts first
    pm = mask_of(set().union(*parts)) if parts else 0
    S = sorted((v for v in L if v not in in_c), key=lambda v: (popcount(red[v] & pm), v))[:sig]
    if len(S) < sig:
        return _undecided(f"only {len(S)} leftover vertices outside every C_i, need {sig}")
    blue = _blue_multipartite(col, H, list(parts), S)
    if blue is None:
        return _undecided("greedy blue multipartite construction got stuck")
    return blue


# -- path versus power of a path -----------------------------------------------------------

def _peel_cycles(red: Graph, min_len: int, guard: int) -> list[list[int]]:
    left = list(range(red.n))
    cycles = []
    while left:
        sub = red.induced(left)
        cyc = find_longest_cycle(sub, guard=guard)
        if len(cyc) < max(min_len, 3):
            break
        cycles.append([left[i] for i in cyc])
        gone = set(cycles[-1])
        left = [v for v in left if v not in gone]
    return cycles


def path_vs_power_pipeline(
    col: EdgeColouring,
    n: int,
    k: int,
    eps: Fraction,
    require_size: bool = True,
    thresholds: Thresholds = Thresholds(),
    guard: int = 64,
    path_guard: int = 24,
) -> PipelineOutcome:
    """Red P_n or blue P^k_n.

    Peel longest red cycles V_1, V_2, ... while they have at least eps^2 n
    vertices.  A cycle of length >= n gives a red P_n.  If the rest W is large,
    the greedy embedding finds a blue P^k_n inside W.  Otherwise the cycles
    are bundled into k+1 groups, each of reduced size at least ceil(n/(k+1)),
    and the allowed-set embedding places P^k_n across the groups.
    """
    _need_two(col)
    eps = Fraction(eps)
    if require_size and col.n < (k + 1 + Fraction(1, k + 1) + (k + 3) * eps) * n:
        raise ValueError("colouring is below the size bound")
    target = path_power(n, k)
    # the argument assumes there is no red P_n; check that first on small inputs
    if col.n <= path_guard:
        found = contains_subgraph(col.red, path_graph(n))
        if found is not None:
            return _witness(col, path_graph(n), found.mapping, RED)
    cycles = _peel_cycles(col.red, ceil(eps * eps * n), guard)
    for cyc in cycles:
        if len(cyc) >= n:
            return _witness(col, path_graph(n), cyc[:n], RED)
    used = set().union(*map(set, cycles)) if cycles else set()
    W = [v for v in range(col.n) if v not in used]
    if len(W) >= n + (k + 2) * eps * n:
        try:
            emb = greedy_power_embed(col.blue.induced(W), n, k, eps, check=False)
            return _witness(col, target, [W[i] for i in emb.mapping], BLUE)
        except GreedyStuck:
            pass

    q = -(-n // (k + 1))
    cut = thresholds.reduction
    bundles: list[list[int]] = []
    i = 0
    for _ in range(k):
        start, total = i, 0
        while i < len(cycles) and total < q:
            total += max(len(cycles[i]) - cut, 0)
            i += 1
        if total < q:
            return _undecided("cycles too short to form the bundles")
        bundles.append(list(range(start, i)))
    bundles.append(list(range(i, len(cycles))))
    if sum(max(len(cycles[j]) - cut, 0) for j in bundles[-1]) < q:
        return _undecided("last bundle too small")

    placement = []
    fill = {j: 0 for j in range(len(cycles))}
    for x in range(n):
        b = bundles[x % (k + 1)]
        part = next(j for j in b if fill[j] < len(cycles[j]) - cut)
        fill[part] += 1
        placement.append(part)
    rr = -(-n // max(ceil(eps * eps * n), 1)) + 2
    d = 2 * k
    try:
        inst = BlowupInstance.make(col, cycles, r=rr, d=d, s=max(max(map(len, cycles)), d * d))
        emb = blowup_embed(inst, target, placement, p=thresholds.p, floor=thresholds.floor, reduction=cut)
    except (AllowedSetExhausted, PreconditionError) as exc:
        return _undecided(f"bundled embedding failed: {exc}")
    return _witness(col, target, emb.mapping, BLUE)


# -- power versus power --------------------------------------------------------------------

def _mono_cover(col: EdgeColouring, s: int) -> tuple[list[frozenset[int]], list[frozenset[int]], frozenset[int]]:
    """Split into red and blue s-cliques, largest monochromatic clique first (red on ties)."""
    left = (1 << col.n) - 1
    fam: tuple[list, list] = ([], [])
    while left:
        best = None
        for c in (RED, BLUE):
            q = max_clique_in(col.graph(c), within=left)
            if len(q) >= s and (best is None or len(q) > len(best[1])):
                best = (c, q)
        if best is None:
            break
        take = frozenset(sorted(best[1])[:s])
        fam[best[0]].append(take)
        left &= ~mask_of(take)
    return fam[RED], fam[BLUE], frozenset(bits(left))


def power_vs_power_pipeline(
    col: EdgeColouring,
    n: int,
    k: int,
    s: int,
    eps: Fraction = Fraction(1, 10),
    thresholds: Thresholds = Thresholds(),
) -> PipelineOutcome:
    """Monochromatic P^k_n through the majority family of s-cliques.

    The auxiliary colouring joins two cliques in their colour iff a K_{4k,4k}
    of that colour sits between them.  A same-colour P_t there lifts by
    threading; an other-colour P^k_t lifts by the allowed-set embedding.
    """
    _need_two(col)
    if k < 1 or s < 4 * k:
        raise ValueError("need k >= 1 and s >= 4k")
    reds, blues, _ = _mono_cover(col, s)
    c = RED if len(reds) >= len(blues) else BLUE
    family = reds if c == RED else blues
    if not family:
        return _undecided("no monochromatic s-clique")
    # work in a copy where the majority colour is red
    work = col if c == RED else col.permute_colours([1, 0])
    aux = build_auxiliary(work, CliqueCover(family, frozenset()), k, size=4 * k)
    t = (k + 1) * -(-n // ((k + 1) * s))
    target = path_power(n, k)
    inner = path_vs_power_pipeline(aux.base, t, k, eps, require_size=False, thresholds=thresholds)
    if inner.tag == "red":
        try:
            emb = aux_path_to_power(work, aux, inner.witness.mapping, k)
        except LinkError as exc:
            return _undecided(str(exc))
        return _witness(col, target, emb.mapping[:n], c)
    if inner.tag == "blue":
        aux_place = blowup_power_placement(n, k, s)
        cliques = [aux.clique_map[inner.witness.mapping[a]] for a in range(t)]
        try:
            inst = BlowupInstance.make(work, cliques, r=4 * k, d=2 * k, s=max(s, 4 * k * k))
            emb = blowup_embed(inst, target, aux_place, p=thresholds.p, floor=thresholds.floor, reduction=thresholds.reduction)
        except (AllowedSetExhausted, PreconditionError) as exc:
            return _undecided(f"lifting the auxiliary power failed: {exc}")
        return _witness(col, target, emb.mapping, 1 - c)
    return _undecided("auxiliary colouring: " + (inner.reason or inner.tag))
