"""Exact Ramsey machinery: arrowing, Ramsey numbers, goodness, R_hom, W and Z.

The engine works level by level.  Level N holds one representative of every
r-colouring of K_N (up to isomorphism, and up to swapping colours when the
targets allow it) with no target in its colour.  Level N+1 is obtained by
adding a vertex and colouring its N new pairs one at a time; after each pair
only copies through that pair are looked for.  K_N arrows the targets exactly
when level N is empty.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .canon import canonical_graph, canonical_labelling
from .colouring import EdgeColouring
from .formats import to_graph6
from .graph import Graph, bits
from .invariants import chromatic_number, sigma
from .match import arc_orbit_representatives, find_copy, find_copy_through

ENGINE_VERSION = "levels-1"
DEFAULT_GUARDS = {1: 64, 2: 13, 3: 8}
LEDGER_ENV = "RAMSEYGOOD_LEDGER"

Target = tuple[Graph, int]
Layers = tuple[tuple[int, ...], ...]


class GuardExceeded(RuntimeError):
    """The search would pass its size guard.  ``lower`` is the best proven bound."""

    def __init__(self, message: str, lower: int | None = None):
        super().__init__(message)
        self.lower = lower


@dataclass
class SearchCertificate:
    nodes: int = 0
    max_depth: int = 0
    level_sizes: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "max_depth": self.max_depth, "level_sizes": list(self.level_sizes)}


@dataclass
class RamseyResult:
    value: int
    lower_witness: EdgeColouring | None
    upper_certificate: SearchCertificate

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lower_witness": None if self.lower_witness is None else json.loads(self.lower_witness.to_json()),
            "upper_certificate": self.upper_certificate.to_dict(),
        }


@dataclass(frozen=True)
class HomTarget:
    pattern: Graph
    colour: int

    def __post_init__(self):
        if self.pattern.n == 0:
            raise ValueError("homomorphism targets must have a vertex")


# -- the level engine ----------------------------------------------------------

@dataclass(frozen=True)
class _Spec:
    r: int
    hom: bool
    # per colour: patterns with at least one edge, with their arc representatives
    edged: tuple[tuple[tuple[Graph, tuple], ...], ...]
    # per colour: patterns with isolated vertices (copy mode needs a full check)
    isolated: tuple[tuple[Graph, ...], ...]
    # smallest N at which an edgeless target is forced
    edgeless_at: int | None
    swap: bool


def _make_spec(targets: Sequence[Target], r: int, hom: bool) -> _Spec:
    edged = [[] for _ in range(r)]
    isolated = [[] for _ in range(r)]
    edgeless_at = None
    for g, c in targets:
        if not 0 <= c < r:
            raise ValueError(f"colour {c} out of range for {r} colours")
        if g.num_edges() == 0:
            need = min(g.n, 1) if hom else g.n
            edgeless_at = need if edgeless_at is None else min(edgeless_at, need)
            continue
        edged[c].append((g, arc_orbit_representatives(g)))
        if not hom and g.min_degree() == 0:
            isolated[c].append(g)
    swap = False
    if r == 2:
        key = [sorted(graph_key(g) for g, col in targets if col == c) for c in range(2)]
        swap = key[0] == key[1]
    return _Spec(
        r, hom, tuple(tuple(x) for x in edged), tuple(tuple(x) for x in isolated), edgeless_at, swap
    )


def graph_key(g: Graph) -> str:
    """Canonical graph6 string; equal exactly for isomorphic graphs."""
    return to_graph6(canonical_graph(g))


def _canonical(n: int, layers: list[list[int]], swap: bool) -> tuple:
    """Certificate plus canonically relabelled layers."""
    options = [layers]
    if swap:
        options.append([layers[1], layers[0]])
    best = None
    for lay in options:
        cert, order = canonical_labelling(n, tuple(tuple(x) for x in lay[1:]))
        if best is None or cert < best[0]:
            best = (cert, order, lay)
    cert, order, lay = best
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for rows in lay:
        new = [0] * n
        for v in range(n):
            m = 0
            for u in bits(rows[v]):
                m |= 1 << pos[u]
            new[pos[v]] = m
        out.append(tuple(new))
    return cert, tuple(out)


def _extend(spec: _Spec, parent: Layers, n: int) -> tuple[dict, int, int]:
    """All good one-vertex extensions of ``parent`` (on n vertices), canonically reduced."""
    r = spec.r
    rows = [list(p) + [0] for p in parent]
    mask = (1 << (n + 1)) - 1
    found: dict = {}
    nodes = 0
    depth = 0
    new_bit = 1 << n

    def hit(c: int, i: int) -> bool:
        for g, arcs in spec.edged[c]:
            if find_copy_through(rows[c], mask, g, i, n, arcs, injective=not spec.hom) is not None:
                return True
        return False

    def leaf() -> None:
        for c in range(r):
            for g in spec.isolated[c]:
                if find_copy(rows[c], mask, g, degree_filter=False) is not None:
                    return
        cert, lay = _canonical(n + 1, rows, spec.swap)
        if cert not in found:
            found[cert] = lay

    def go(i: int) -> None:
        nonlocal nodes, depth
        if i == n:
            leaf()
            return
        for c in range(r):
            nodes += 1
            rows[c][i] |= new_bit
            rows[c][n] |= 1 << i
            if not hit(c, i):
                depth = max(depth, i + 1)
                go(i + 1)
            rows[c][i] &= ~new_bit
            rows[c][n] &= ~(1 << i)

    go(0)
    return found, nodes, depth


def _extend_job(args):
    spec, parent, n = args
    found, nodes, depth = _extend(spec, parent, n)
    return list(found.items()), nodes, depth


def _next_level(spec: _Spec, level: list[Layers], n: int, cert: SearchCertificate, workers: int) -> list[Layers]:
    merged: dict = {}
    if workers > 1 and len(level) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_extend_job, [(spec, p, n) for p in level], chunksize=max(1, len(level) // (4 * workers))))
    else:
        results = [_extend_job((spec, p, n)) for p in level]
    # merging in parent order and sorting by certificate keeps runs identical
    for items, nodes, depth in results:
        cert.nodes += nodes
        cert.max_depth = max(cert.max_depth, n * (n - 1) // 2 + depth)
        for k, v in items:
            merged.setdefault(k, v)
    return [merged[k] for k in sorted(merged)]


def _levels(spec: _Spec, limit: int, workers: int = 1):
    """Yield ``(N, level, certificate)`` for N = 1, 2, ... while the level is nonempty and N <= limit."""
    cert = SearchCertificate()
    level: list[Layers] = [tuple((0,) for _ in range(spec.r))]
    n = 1
    while True:
        if spec.edgeless_at is not None and n >= spec.edgeless_at:
            level = []
        cert.level_sizes.append(len(level))
        yield n, level, cert
        if not level or n >= limit:
            return
        level = _next_level(spec, level, n, cert, workers)
        n += 1


def _guard(r: int, guard: int | None) -> int:
    if guard is not None:
        return guard
    return DEFAULT_GUARDS.get(r, 6)


def _colours(targets: Sequence[Target], r: int | None) -> int:
    if r is None:
        r = max((c for _, c in targets), default=0) + 1
    return max(r, 1)


def _witness(level: list[Layers], n: int, r: int) -> EdgeColouring:
    lay = level[0]
    return EdgeColouring(n, r, lay)


def arrows(
    N: int,
    targets: Sequence[Target],
    r: int | None = None,
    guard: int | None = None,
    workers: int = 1,
) -> tuple[bool, SearchCertificate]:
    """True iff every r-colouring of K_N has some target in its colour.

    ``targets`` is a list of ``(graph, colour)``; r defaults to one more than
    the largest colour used.
    """
    r = _colours(targets, r)
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N > _guard(r, guard):
        raise GuardExceeded(f"N = {N} is above the guard {_guard(r, guard)} for {r} colours")
    if N == 0:
        return False, SearchCertificate(level_sizes=[])
    spec = _make_spec(targets, r, hom=False)
    for n, level, cert in _levels(spec, N, workers):
        if not level:
            return True, cert
    return False, cert


def _least(spec: _Spec, r: int, limit: int, workers: int) -> RamseyResult:
    prev: list[Layers] = []
    for n, level, cert in _levels(spec, limit, workers):
        if not level:
            witness = _witness(prev, n - 1, r) if n > 1 else None
            return RamseyResult(n, witness, cert)
        prev = level
    raise GuardExceeded(f"value exceeds the guard {limit}", lower=limit + 1)


def ramsey_number(
    targets: Sequence[Target],
    lower_hint: int | None = None,
    upper_hint: int | None = None,
    r: int | None = None,
    guard: int | None = None,
    workers: int = 1,
) -> RamseyResult:
    """Least N such that K_N arrows the targets.

    Levels are built upwards from N = 1 (each level is needed to build the
    next), so hints only cap the search and are checked against the answer.
    """
    r = _colours(targets, r)
    limit = _guard(r, guard)
    if upper_hint is not None:
        limit = min(limit, upper_hint)
    spec = _make_spec(targets, r, hom=False)
    try:
        res = _least(spec, r, limit, workers)
    except GuardExceeded as exc:
        if upper_hint is not None and upper_hint <= _guard(r, guard):
            raise ValueError(f"upper hint {upper_hint} is too small") from exc
        raise
    if lower_hint is not None and res.value < lower_hint:
        raise ValueError(f"value {res.value} is below the lower hint {lower_hint}")
    return res


@dataclass(frozen=True)
class GoodnessReport:
    ramsey: int
    burr_bound: int
    good: bool

    def to_dict(self) -> dict:
        return {"ramsey": self.ramsey, "burr_bound": self.burr_bound, "good": self.good}


def burr_bound(G: Graph, H: Graph) -> int:
    return (chromatic_number(H) - 1) * (G.n - 1) + sigma(H)


def goodness_report(G: Graph, H: Graph, guard: int | None = None, workers: int = 1) -> GoodnessReport:
    if not G.is_connected():
        raise ValueError("G must be connected")
    bound = burr_bound(G, H)
    if G.n <= sigma(H):
        raise ValueError("need |G| > sigma(H)")
    value = ramsey_number([(G, 0), (H, 1)], guard=guard, workers=workers).value
    return GoodnessReport(value, bound, value == bound)


# -- homomorphisms ---------------------------------------------------------------

def hom_exists(H: Graph, target: Graph) -> bool:
    """Is there an edge-preserving (not necessarily injective) map H -> target?"""
    if H.n == 0:
        return True
    if target.n == 0:
        return False
    return find_copy(target.adj, target.vertex_mask, H, injective=False) is not None


def hom_ramsey_result(targets: Sequence[Graph], guard: int | None = None, workers: int = 1) -> RamseyResult:
    hts = [HomTarget(g, i) for i, g in enumerate(targets)]
    if not hts:
        raise ValueError("need at least one target")
    r = len(hts)
    spec = _make_spec([(t.pattern, t.colour) for t in hts], r, hom=True)
    return _least(spec, r, _guard(r, guard), workers)


def hom_ramsey(targets: Sequence[Graph], guard: int | None = None, workers: int = 1) -> int:
    """Least N such that every len(targets)-colouring of K_N admits a homomorphism
    from targets[i] into colour i for some i."""
    return hom_ramsey_result(targets, guard, workers).value


def compute_W(targets: Sequence[Graph], guard: int | None = None) -> int:
    return hom_ramsey(targets, guard) - 1


# -- blow-ups and Z -----------------------------------------------------------------

def blow_up_rows(n: int, rows: Sequence[int], at: Sequence[int], m: int) -> tuple[int, list[int]]:
    """Blow up ``at`` inside one relation given by bitset rows.

    Vertex v keeps index v; the extra twins of the vertices in ``at`` are
    appended in order, m-1 per vertex.
    """
    at = sorted(set(at))
    copies = {v: [v] for v in range(n)}
    nxt = n
    for v in at:
        for _ in range(m - 1):
            copies[v].append(nxt)
            nxt += 1
    out = [0] * nxt
    for u in range(n):
        for v in bits(rows[u]):
            for a in copies[u]:
                for b in copies[v]:
                    out[a] |= 1 << b
    return nxt, out


def blow_up(G: Graph, at, m: int) -> Graph:
    """Replace each vertex of ``at`` by m pairwise non-adjacent twins."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n, rows = blow_up_rows(G.n, G.adj, list(at), m)
    return Graph(n, tuple(rows))


def compute_Z(targets: Sequence[Graph], W: int, m: int | None = None, guard: int = 4) -> int:
    """Least N such that every coloured F on W+N vertices works.

    F has every pair touching the first W vertices present; pairs among the
    last N may be absent.  F works when the m-blow-up of its first W vertices
    contains some targets[i] in colour i.  Raises GuardExceeded("Z > guard").
    """
    r = len(targets)
    if r == 0 or W < 0:
        raise ValueError("need targets and W >= 0")
    if m is None:
        m = max(g.n for g in targets)
    specs = [(g, arc_orbit_representatives(g)) for g in targets]
    for N in range(1, guard + 1):
        if _z_counterexample(targets, specs, W, N, m) is None:
            return N
    raise GuardExceeded(f"Z > {guard}", lower=guard + 1)


def _z_counterexample(targets, specs, W: int, N: int, m: int):
    n = W + N
    mask = (1 << n) - 1
    rows = [[0] * n for _ in range(len(targets))]
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    seen: set = set()
    partition = [(1 << W) - 1, mask & ~((1 << W) - 1)]

    def in_f(c: int, u: int, v: int) -> bool:
        g, arcs = specs[c]
        return g.num_edges() > 0 and find_copy_through(rows[c], mask, g, u, v, arcs) is not None

    def check_leaf():
        key = canonical_labelling(n, tuple(tuple(x) for x in rows), partition)[0]
        if key in seen:
            return None
        seen.add(key)
        for c, g in enumerate(targets):
            size, big = blow_up_rows(n, rows[c], range(W), m)
            if find_copy(big, (1 << size) - 1, g) is not None:
                return None
        return [tuple(x) for x in rows]

    def go(i: int):
        if i == len(pairs):
            return check_leaf()
        u, v = pairs[i]
        if u >= W:
            out = go(i + 1)  # pair absent
            if out is not None:
                return out
        for c in range(len(targets)):
            rows[c][u] |= 1 << v
            rows[c][v] |= 1 << u
            out = None
            if not in_f(c, u, v):
                out = go(i + 1)
            rows[c][u] &= ~(1 << v)
            rows[c][v] &= ~(1 << u)
            if out is not None:
                return out
        return None

    # edgeless targets are present as soon as there are enough vertices
    for c, g in enumerate(targets):
        if g.num_edges() == 0 and g.n <= W * m + N:
            return None
    return go(0)


def z_stabilization(targets: Sequence[Graph], W: int, ms: Sequence[int], guard: int = 4) -> dict[int, int | None]:
    """Z for each m in ``ms``; None where Z exceeds the guard."""
    out = {}
    for m in ms:
        try:
            out[m] = compute_Z(targets, W, m, guard)
        except GuardExceeded:
            out[m] = None
    return out


# -- persistent ledger -----------------------------------------------------------------

def ledger_key(kind: str, targets: Sequence[Target]) -> str:
    parts = sorted(f"{c}:{graph_key(g)}" for g, c in targets)
    return kind + "|" + ",".join(parts)


class ResultLedger:
    """JSON file of computed values keyed by canonical graph6 of the targets."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = path or os.environ.get(LEDGER_ENV)

    def _load(self) -> dict:
        if not self.path or not os.path.exists(self.path):
            return {}
        with open(self.path) as fh:
            return json.load(fh)

    def get(self, kind: str, targets: Sequence[Target]) -> dict | None:
        if not self.path:
            return None
        entry = self._load().get(ledger_key(kind, targets))
        if entry and entry.get("engine") == ENGINE_VERSION:
            return entry
        return None

    def put(self, kind: str, targets: Sequence[Target], result: RamseyResult) -> None:
        if not self.path:
            return
        data = self._load()
        entry = result.to_dict()
        entry["engine"] = ENGINE_VERSION
        data[ledger_key(kind, targets)] = entry
        tmp = f"{self.path}.tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)
