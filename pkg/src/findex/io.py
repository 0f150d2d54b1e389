"""Edge-list text and graph6 encodings."""

from __future__ import annotations

from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"{message} at line {line}")


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n`` header plus one ``u v`` pair per line; ``#`` comments."""
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError("expected vertex count", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[0]!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing vertex count")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = [1 if j in g.adjacency[i] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ParseError(f"invalid graph6 character in {s!r}")
    n = vals[0]
    if n > GRAPH6_MAX_N:
        raise ParseError(f"graph6 input supports n <= {GRAPH6_MAX_N}")
    nbits = n * (n - 1) // 2
    if len(vals) - 1 != -(-nbits // 6):
        raise ParseError(f"graph6 length mismatch for n={n}")
    bits = [(v >> (5 - i)) & 1 for v in vals[1:] for i in range(6)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits")
    return Graph.from_edges(n, edges)


def looks_like_graph6(text: str) -> bool:
    body = text.strip()
    if body.startswith(_HEADER):
        return True
    return bool(body) and "\n" not in body and all(63 <= ord(c) <= 126 for c in body)


def read_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
