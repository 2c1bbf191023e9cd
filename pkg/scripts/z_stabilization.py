"""Report Z(targets; W, m) over a range of blow-up sizes m.

The definition needs m "large enough"; this prints the value for each m so
stabilization can be read off rather than assumed.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field

from ramseygood.families import parse_target
from ramseygood.search import compute_W, z_stabilization


@dataclass
class ZConfig:
    targets: list[str] = field(default_factory=lambda: ["C_3", "C_5"])
    W: int | None = None
    ms: list[int] = field(default_factory=lambda: [2, 3, 4, 5, 6])
    guard: int = 4


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("targets", nargs="*", default=["C_3", "C_5"])
    ap.add_argument("--W", type=int, help="defaults to R_hom - 1")
    ap.add_argument("--m", dest="ms", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--guard", type=int, default=4)
    cfg = ZConfig(**vars(ap.parse_args()))
    graphs = [parse_target(t) for t in cfg.targets]
    W = compute_W(graphs) if cfg.W is None else cfg.W
    values = z_stabilization(graphs, W, cfg.ms, cfg.guard)
    print(json.dumps({"targets": cfg.targets, "W": W, "Z_by_m": values, "guard": cfg.guard}))
    stable = {v for v in values.values()}
    print("constant over the range" if len(stable) == 1 else "varies with m")


if __name__ == "__main__":
    main()
