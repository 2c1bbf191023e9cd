"""Fuzz the pipelines: every witness must validate, none may appear on extremal colourings."""

from __future__ import annotations

import argparse
import collections
import random
from dataclasses import dataclass
from fractions import Fraction

from ramseygood.colouring import BLUE, RED, validate_embedding
from ramseygood.instances import fuzz_case
from ramseygood.invariants import chromatic_number, sigma
from ramseygood.pipelines import (
    decide_power_vs_H,
    path_vs_power_pipeline,
    power_vs_power_pipeline,
    stability_decompose,
    stability_partition,
)


@dataclass
class FuzzConfig:
    count: int = 10_000
    seed: int = 0
    eps: Fraction = Fraction(1, 10)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--eps", type=Fraction, default=Fraction(1, 10))
    cfg = FuzzConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    tags = collections.Counter()
    problems = []
    for i in range(cfg.count):
        case = fuzz_case(rng)
        col, H, n, k = case.colouring, case.H, case.n, case.k
        runs = {
            "partition": lambda: stability_partition(col, chromatic_number(H), n),
            "decompose": lambda: stability_decompose(col, H, k, 2 * k, cfg.eps, n=n),
            "decide": lambda: decide_power_vs_H(col, H, n, k, cfg.eps, require_size=False),
            "path-vs-power": lambda: path_vs_power_pipeline(col, n, k, cfg.eps, require_size=False),
            "power-vs-power": lambda: power_vs_power_pipeline(col, n, k, 4 * k),
        }
        strict = {"decompose", "decide"} | ({"partition", "path-vs-power", "power-vs-power"} if sigma(H) == 1 else set())
        for name, run in runs.items():
            try:
                out = run()
            except Exception as exc:  # a crash is a finding, keep going
                problems.append((i, name, f"crash: {exc!r}"))
                continue
            tags[name, out.tag] += 1
            if out.tag in ("red", "blue"):
                colour = RED if out.tag == "red" else BLUE
                if not validate_embedding(out.pattern, out.witness.mapping, col, colour):
                    problems.append((i, name, "invalid witness"))
                if case.extremal and name in strict:
                    problems.append((i, name, "witness on an extremal colouring"))
    for (name, tag), c in sorted(tags.items()):
        print(f"{name:<15} {tag:<10} {c}")
    print(f"{len(problems)} problems")
    for p in problems[:20]:
        print(" ", p)


if __name__ == "__main__":
    main()
