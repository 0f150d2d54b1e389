"""Immutable simple graphs and the forgotten index.

Vertices are the dense integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, repeated edges and out-of-range ends."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, frozenset(seen), tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


def forgotten_index(g: Graph, *, verify: bool = False) -> int:
    """Sum of cubed degrees.

    With ``verify=True`` the edge form (sum of ``d(u)^2 + d(v)^2`` over edges)
    is also computed and must agree exactly.
    """
    total = sum(d**3 for d in g.degrees())
    if verify:
        alt = forgotten_index_edge_form(g)
        if alt != total:
            raise AssertionError(f"vertex form {total} != edge form {alt}")
    return total


def forgotten_index_edge_form(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] ** 2 + deg[v] ** 2 for u, v in g.edges)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    # the empty graph counts as disconnected, so does any edgeless graph with n > 1
    if g.n == 0:
        return False
    return len(components(g)) == 1


def cycle_rank(g: Graph) -> int:
    return g.m - g.n + len(components(g))


def is_bicyclic(g: Graph, *, require_connected: bool = True) -> bool:
    """``m == n + 1``, and connected unless ``require_connected`` is off."""
    if g.m != g.n + 1:
        return False
    return is_connected(g) if require_connected else True
