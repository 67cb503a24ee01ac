"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _size_prefix(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    bitlist = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bitlist.extend([0] * (-len(bitlist) % 6))
    chars = []
    for k in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _size_prefix(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>"):
        if not s.startswith(HEADER):
            raise FormatError(f"malformed header in {text!r}")
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} at offset {pos} is outside the graph6 range")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise FormatError("truncated size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise FormatError("truncated size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    need_bits = n * (n - 1) // 2
    need = (need_bits + 5) // 6
    if len(body) < need:
        raise FormatError(f"truncated bit payload: expected {need} characters, found {len(body)}")
    if len(body) > need:
        raise FormatError(f"trailing characters after payload: expected {need}, found {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    """``n m`` on the first line, then one ``u v`` line per edge (u < v, sorted)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        edges.append((u, v))
    if len(set((min(e), max(e)) for e in edges)) != len(edges):
        raise FormatError("repeated edge")
    try:
        return Graph(n, frozenset(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def looks_like_edge_list(text: str) -> bool:
    first = text.strip().splitlines()[0] if text.strip() else ""
    parts = first.split()
    return len(parts) == 2 and all(p.isdigit() for p in parts)


def parse_graph_text(text: str) -> Graph:
    """Edge list if the first line is ``n m``, otherwise a single graph6 record."""
    if looks_like_edge_list(text):
        return parse_edge_list(text)
    return parse_graph6(text.strip().splitlines()[0])
