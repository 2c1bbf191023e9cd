"""Exhaustively check every avoidance claim of the explicit colourings."""

from __future__ import annotations

import argparse
import time

from ramseygood.constructions import (
    all_gadgets,
    brown_polarity_graph,
    burr_colouring,
    cycle_remainder_colouring,
    j_gadget_colouring,
    power_lower_colouring,
    verify_avoidance,
)
from ramseygood.graph import complete_multipartite, cycle_power, path_graph, path_power
from ramseygood.invariants import contains_kss


def check(label, col, red, blue) -> bool:
    start = time.perf_counter()
    rep = verify_avoidance(col, red, blue)
    took = time.perf_counter() - start
    print(f"{'ok  ' if rep.verified else 'FAIL'} {label:<40} n={col.n:<3} {took:6.2f}s")
    if not rep.verified:
        w = rep.red_witness or rep.blue_witness
        print(f"     {'red' if rep.red_witness else 'blue'} copy at {list(w.mapping)}")
    return rep.verified


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-t", type=int, default=2)
    args = ap.parse_args()
    # blue target K_{sig,...,sig} has chromatic number chi and sigma-value sig
    for chi, sig, n in [(3, 1, 4), (3, 1, 6), (4, 1, 5), (3, 2, 5), (2, 3, 6)]:
        H = complete_multipartite([sig] * chi)
        check(f"burr({chi},{sig},{n}) vs P_{n}/K_{{{','.join([str(sig)] * chi)}}}",
              burr_colouring(chi, sig, n), path_graph(n), H)
    for k in (2, 3):
        for t in range(1, args.max_t + 1):
            target = path_power((k + 1) * t, k)
            if k == 3 and t > 1:
                continue  # 3t(k+1)-vertex targets get slow past this point
            check(f"power_lower({k},{t}) vs P^{k}_{(k + 1) * t}", power_lower_colouring(k, t), target, target)
    target = path_power(6, 2)
    for g in all_gadgets(2):
        check(f"gadget {g.colour} t=2", j_gadget_colouring(g, 2), target, target)
    # expected to fail: the block rules admit monochromatic copies here
    for k, t, rem in [(2, 1, 1), (2, 2, 1), (2, 1, 2)]:
        target = cycle_power((k + 1) * t + rem, k)
        check(f"cycle_remainder({k},{t},{rem}) vs C^{k}_{(k + 1) * t + rem}",
              cycle_remainder_colouring(k, t, rem), target, target)
    for p in (2, 3, 5, 7):
        g = brown_polarity_graph(p)
        free = contains_kss(g, range(g.n), range(g.n), 2) is None
        print(f"{'ok  ' if free else 'FAIL'} brown p={p} K_2,2-free{'':<20} n={g.n}")


if __name__ == "__main__":
    main()
