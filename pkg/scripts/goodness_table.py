"""Exact R(G, H) against the chromatic lower bound for small families.

    python3 scripts/goodness_table.py --family "P^2_{n}" --H K_3 --from 3 --to 8
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from ramseygood.families import parse_target
from ramseygood.search import GuardExceeded, goodness_report


@dataclass
class TableConfig:
    family: str = "P_{n}"
    H: str = "K_3"
    lo: int = 3
    hi: int = 7
    guard: int | None = None
    workers: int = 1
    out: str | None = None


def run(cfg: TableConfig) -> list[dict]:
    H = parse_target(cfg.H)
    rows = []
    for n in range(cfg.lo, cfg.hi + 1):
        G = parse_target(cfg.family.replace("{n}", str(n)))
        start = time.perf_counter()
        try:
            rep = goodness_report(G, H, guard=cfg.guard, workers=cfg.workers)
            row = {"n": n, **rep.to_dict()}
        except GuardExceeded as exc:
            row = {"n": n, "ramsey": f">= {exc.lower}", "burr_bound": None, "good": None}
        except ValueError as exc:
            row = {"n": n, "skipped": str(exc)}
        row["seconds"] = round(time.perf_counter() - start, 3)
        rows.append(row)
        print(json.dumps(row), flush=True)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="P_{n}")
    ap.add_argument("--H", default="K_3")
    ap.add_argument("--from", dest="lo", type=int, default=3)
    ap.add_argument("--to", dest="hi", type=int, default=7)
    ap.add_argument("--guard", type=int)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out")
    cfg = TableConfig(**vars(ap.parse_args()))
    rows = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
