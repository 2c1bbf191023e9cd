"""Exact graph parameters: chromatic number, sigma, bandwidth, cycles, cliques, K_{s,s}.

All searches are exponential in the worst case and carry explicit size
guards.  Ties are broken towards the lowest vertex index.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, bits, mask_of, popcount


class SizeGuardError(ValueError):
    """Raised when an exact search is asked to run beyond its size guard."""


def _guard(n: int, guard: int, what: str):
    if n > guard:
        raise SizeGuardError(f"{what}: {n} vertices exceeds guard {guard}")


# -- colouring ---------------------------------------------------------------

def greedy_colouring(g: Graph) -> list[int]:
    """DSATUR colouring; an upper bound for the chromatic number."""
    n = g.n
    colour = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0), key=lambda u: (popcount(sat[u]), g.degree(u), -u))
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colour[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    return colour


def _q_colouring(g: Graph, q: int) -> list[int] | None:
    n = g.n
    colour = [-1] * n
    sat = [0] * n

    def pick():
        best = None
        for u in range(n):
            if colour[u] < 0:
                key = (popcount(sat[u]), popcount(g.adj[u]), -u)
                if best is None or key > best[0]:
                    best = (key, u)
        return None if best is None else best[1]

    def go(used: int) -> bool:
        v = pick()
        if v is None:
            return True
        limit = min(q, used + 1)  # new colours are interchangeable
        for c in range(limit):
            if (sat[v] >> c) & 1:
                continue
            colour[v] = c
            changed = [u for u in bits(g.adj[v]) if colour[u] < 0 and not (sat[u] >> c) & 1]
            for u in changed:
                sat[u] |= 1 << c
            if go(max(used, c + 1)):
                return True
            for u in changed:
                sat[u] &= ~(1 << c)
            colour[v] = -1
        return False

    return colour if go(0) else None


def optimal_colouring(g: Graph, guard: int = 64) -> list[int]:
    """A proper colouring with exactly chi(g) colours."""
    _guard(g.n, guard, "chromatic_number")
    if g.n == 0:
        return []
    upper = greedy_colouring(g)
    ub = max(upper) + 1
    lb = len(max_clique_in(g))
    for q in range(lb, ub):
        found = _q_colouring(g, q)
        if found is not None:
            return found
    return upper


def chromatic_number(g: Graph, guard: int = 64) -> int:
    """Exact chromatic number by clique lower bound, DSATUR upper bound, then backtracking."""
    col = optimal_colouring(g, guard)
    return max(col) + 1 if col else 0


def sigma_colouring(g: Graph, guard: int = 64) -> list[int]:
    """A chi(g)-colouring whose smallest class is as small as possible.

    The smallest class is given the highest colour, ``chi - 1``.
    """
    _guard(g.n, guard, "sigma")
    n = g.n
    if n == 0:
        return []
    chi = chromatic_number(g, guard)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    colour = [-1] * n
    sizes = [0] * chi
    best: list = [n + 1, None]

    def go(i: int, used: int):
        if best[0] == 1:
            return
        if min(sizes[:used] + [0] * (chi - used)) >= best[0] and used == chi:
            return
        if i == n:
            if used == chi:
                m = min(sizes)
                if m < best[0]:
                    best[0], best[1] = m, colour[:]
            return
        if chi - used > n - i:
            return
        v = order[i]
        for c in range(min(chi, used + 1)):
            if any(colour[u] == c for u in bits(g.adj[v])):
                continue
            colour[v] = c
            sizes[c] += 1
            go(i + 1, max(used, c + 1))
            sizes[c] -= 1
            colour[v] = -1

    go(0, 0)
    col = best[1]
    counts = [col.count(c) for c in range(chi)]
    smallest = min(range(chi), key=lambda c: (counts[c], c))
    swap = {smallest: chi - 1, chi - 1: smallest}
    return [swap.get(c, c) for c in col]


def sigma(g: Graph, guard: int = 64) -> int:
    """Minimum size of a colour class over all proper chi(g)-colourings."""
    col = sigma_colouring(g, guard)
    if not col:
        return 0
    return col.count(max(col))


# -- bandwidth -----------------------------------------------------------------

def bandwidth(g: Graph, guard: int = 16) -> int:
    """Minimum over vertex orderings of the largest edge stretch."""
    _guard(g.n, guard, "bandwidth")
    if g.num_edges() == 0:
        return 0
    lb = max(1, (g.max_degree() + 1) // 2)
    for k in range(lb, g.n):
        if bandwidth_layout(g, k) is not None:
            return k
    return g.n - 1


def bandwidth_layout(g: Graph, k: int) -> list[int] | None:
    """An ordering with every edge stretched at most ``k``, or None."""
    n = g.n
    pos = [-1] * n
    order: list[int] = []
    failed: set = set()

    def go(placed: int) -> bool:
        p = len(order)
        if p == n:
            return True
        key = (placed, tuple(order[-k:]))
        if key in failed:
            return False
        # deadlines: an unplaced vertex with a placed neighbour at q must sit at <= q + k
        deadline = {}
        for q in range(max(0, p - k), p):
            u = order[q]
            for w in bits(g.adj[u] & ~placed):
                if w not in deadline:
                    deadline[w] = q + k
        if deadline:
            counts = sorted(deadline.values())
            for i, d in enumerate(counts):
                if i + 1 > d - p + 1:
                    failed.add(key)
                    return False
        for v in range(n):
            if (placed >> v) & 1:
                continue
            if any(pos[u] < p - k for u in bits(g.adj[v] & placed)):
                continue
            pos[v] = p
            order.append(v)
            if go(placed | (1 << v)):
                return True
            order.pop()
            pos[v] = -1
        failed.add(key)
        return False

    return order[:] if go(0) else None


# -- cycles --------------------------------------------------------------------

def _blocks(g: Graph) -> list[int]:
    """Vertex masks of the biconnected blocks with at least three vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = [0]
    stack: list[tuple[int, int]] = []

    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        work = [(root, -1, iter(bits(g.adj[root])))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    stack.append((v, u))
                    disc[u] = low[u] = timer[0]
                    timer[0] += 1
                    work.append((u, v, iter(bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            work.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    m = 0
                    while True:
                        a, b = stack.pop()
                        m |= (1 << a) | (1 << b)
                        if (a, b) == (parent, v):
                            break
                    if popcount(m) >= 3:
                        out.append(m)
    return out


def _cycle_search(g: Graph, within: int, *, target: int | None = None, want_set: bool = False):
    """Longest cycle inside the vertex set ``within`` (assumed 2-connected or not).

    Returns ``(length, vertices)``.  With ``target`` the search stops at the
    first cycle of length >= target.  With ``want_set`` ties are broken by the
    lexicographically smallest sorted vertex tuple.
    """
    adj = g.adj
    best = [0, None]
    full = popcount(within)

    def reach(v: int, avail: int) -> int:
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            nxt &= avail & ~seen
            seen |= nxt
            frontier = nxt
        return popcount(seen) - 1

    def better(length: int, path: list[int]) -> bool:
        if length > best[0]:
            return True
        if want_set and length == best[0]:
            return tuple(sorted(path)) < tuple(sorted(best[1]))
        return False

    done = [False]

    def dfs(s: int, v: int, path: list[int], avail: int):
        if done[0]:
            return
        length = len(path)
        if length >= 3 and (adj[v] >> s) & 1 and better(length, path):
            best[0], best[1] = length, path[:]
            # a spanning cycle has the whole set, so ties cannot improve on it
            if (target is not None and length >= target) or length == full:
                done[0] = True
                return
        bound = length + reach(v, avail)
        if bound < best[0] or (bound == best[0] and not want_set):
            return
        for u in bits(adj[v] & avail):
            path.append(u)
            dfs(s, u, path, avail & ~(1 << u))
            path.pop()
            if done[0]:
                return

    for s in bits(within):
        higher = within & ~((1 << (s + 1)) - 1)
        if popcount(higher) + 1 < max(3, best[0]):
            break
        dfs(s, s, [s], higher)
        if done[0]:
            break
    return best[0], best[1]


def find_longest_cycle(g: Graph, guard: int = 64) -> tuple[int, ...]:
    """Vertices of a longest cycle in cyclic order (empty if acyclic).

    Ties are broken by the lexicographically smallest sorted vertex set.
    """
    _guard(g.n, guard, "longest_cycle")
    best_len, best = 0, None
    for block in _blocks(g):
        length, cyc = _cycle_search(g, block, want_set=True)
        if cyc is None:
            continue
        if length > best_len or (length == best_len and tuple(sorted(cyc)) < tuple(sorted(best))):
            best_len, best = length, cyc
    return tuple(best) if best else ()


def longest_cycle(g: Graph, guard: int = 64) -> int:
    """Length of a longest cycle, 0 if the graph is a forest."""
    _guard(g.n, guard, "longest_cycle")
    return max((_cycle_search(g, b)[0] for b in _blocks(g)), default=0)


def has_cycle_at_least(g: Graph, length: int) -> bool:
    """Whether some cycle has at least ``length`` vertices (stops at the first one)."""
    length = max(length, 3)
    for block in _blocks(g):
        if popcount(block) < length:
            continue
        if _cycle_search(g, block, target=length)[0] >= length:
            return True
    return False


# -- cliques and bicliques -----------------------------------------------------

def max_clique_in(g: Graph, bound: int | None = None, within: int | None = None) -> frozenset[int]:
    """First clique of size >= ``bound`` found, else a maximum clique.

    Bron-Kerbosch with pivoting, candidates in increasing vertex order.  The
    search is confined to the vertex mask ``within`` when given.
    """
    within = g.vertex_mask if within is None else within
    adj = g.adj
    best = [0]

    def bk(r: int, p: int, x: int) -> bool:
        size = popcount(r)
        if size > popcount(best[0]):
            best[0] = r
            if bound is not None and size >= bound:
                return True
        if not p:
            return False
        if size + popcount(p) <= popcount(best[0]):
            return False
        px = p | x
        pivot = max(bits(px), key=lambda u: (popcount(p & adj[u]), -u))
        for v in bits(p & ~adj[pivot]):
            if bk(r | (1 << v), p & adj[v], x & adj[v]):
                return True
            p &= ~(1 << v)
            x |= 1 << v
        return False

    if within:
        bk(0, within, 0)
    return frozenset(bits(best[0]))


def contains_kss(
    g: Graph, x: Iterable[int], y: Iterable[int], s: int
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Disjoint ``A`` in x and ``B`` in y of size s with every A-B pair adjacent.

    ``x`` and ``y`` may overlap (pass the whole vertex set twice to ask whether
    the graph contains K_{s,s} at all); the witness sides are always disjoint.
    """
    if s <= 0:
        return frozenset(), frozenset()
    xm, ym = mask_of(x), mask_of(y)
    adj = g.adj
    cand = [v for v in bits(xm) if popcount(adj[v] & ym & ~(1 << v)) >= s]

    def go(start: int, a: int, common: int):
        if popcount(a) == s:
            b = 0
            for u in bits(common):
                b |= 1 << u
                if popcount(b) == s:
                    return a, b
            return None
        need = s - popcount(a)
        for i in range(start, len(cand) - need + 1):
            v = cand[i]
            nc = common & adj[v] & ~(1 << v)
            if popcount(nc) < s:
                continue
            found = go(i + 1, a | (1 << v), nc)
            if found:
                return found
        return None

    found = go(0, 0, ym)
    if found is None:
        return None
    return frozenset(bits(found[0])), frozenset(bits(found[1]))
