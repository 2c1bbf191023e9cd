"""graph6 encoding and DOT export."""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("too many vertices for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string: upper triangle column by column, six bits per byte."""
    bitstream = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bitstream.append((row >> i) & 1)
    bitstream += [0] * (-len(bitstream) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bitstream[k:k + 6])), 2)) for k in range(0, len(bitstream), 6)
    )
    return (HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise ValueError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        if len(vals) < 4:
            raise ValueError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def colouring_to_dot(col, name: str = "K", palette=("red", "blue", "green", "orange", "purple")) -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(col.n)]
    lines += [f'  {u} -- {v} [color="{palette[c % len(palette)]}"];' for u, v, c in col.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
