"""Parse target specs: named families or graph6.

Accepted names: P_n, C_n, K_n, P^k_n, C^k_n (also P_n^k), K_{a,b,...}.
Braces around numbers are optional.  Anything else is read as graph6.
"""

from __future__ import annotations

import re

from .formats import from_graph6
from .graph import Graph, complete_graph, complete_multipartite, cycle_power, path_power

_NUM = r"\{?(\d+)\}?"
_POWER = re.compile(rf"^([PCK])(?:\^{_NUM})?_{_NUM}(?:\^{_NUM})?$")
_MULTI = re.compile(r"^K_\{(\d+(?:\s*,\s*\d+)+)\}$")


def parse_target(spec: str) -> Graph:
    text = spec.strip()
    m = _MULTI.match(text)
    if m:
        return complete_multipartite([int(x) for x in m.group(1).split(",")])
    m = _POWER.match(text)
    if m:
        kind, k1, n, k2 = m.groups()
        if k1 and k2:
            raise ValueError(f"power given twice in {spec!r}")
        n, k = int(n), int(k1 or k2 or 1)
        if kind == "K":
            if k1 or k2:
                raise ValueError("complete graphs take no power")
            return complete_graph(n)
        if kind == "P":
            return path_power(n, k)
        return cycle_power(n, k)
    try:
        return from_graph6(text)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"cannot parse target {spec!r}") from exc
