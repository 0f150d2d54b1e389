"""Degree-sequence realisability and connected realisations."""

from __future__ import annotations

from .graph import Graph, components
from .histogram import DegreeHistogram


def erdos_gallai(seq) -> bool:
    """True iff ``seq`` is the degree sequence of some simple graph."""
    d = sorted((int(x) for x in seq), reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for q in range(1, n + 1):
        prefix += d[q - 1]
        if prefix > q * (q - 1) + sum(min(x, q) for x in d[q:]):
            return False
    return True


def bicyclic_realizable(h: DegreeHistogram) -> bool:
    # histograms have no degree-0 slot; graphical with all degrees >= 1 and
    # at least n - 1 edges means a connected realisation exists
    return h.degree_sum() == 2 * h.n + 2 and erdos_gallai(h.degree_sequence())


def havel_hakimi(seq: list[int]) -> list[tuple[int, int]]:
    """Edges of a simple realisation of ``seq`` (vertex ``i`` gets degree ``seq[i]``)."""
    resid = list(seq)
    edges = []
    while True:
        order = sorted(range(len(resid)), key=lambda v: (-resid[v], v))
        v = order[0]
        d = resid[v]
        if d == 0:
            return edges
        targets = order[1 : d + 1]
        if len(targets) < d or resid[targets[-1]] == 0:
            raise ValueError(f"sequence {seq} is not graphical")
        resid[v] = 0
        for w in targets:
            resid[w] -= 1
            edges.append((min(v, w), max(v, w)))


def _cycle_edge(g: Graph, comp: list[int]):
    """First edge of ``comp`` (in sorted order) whose removal keeps it connected."""
    members = set(comp)
    for u, v in sorted(e for e in g.edges if e[0] in members):
        rest = Graph.from_edges(g.n, g.edges - {(u, v)})
        if any(u in c and v in c for c in components(rest)):
            return u, v
    return None


def realize(h: DegreeHistogram) -> Graph:
    """A connected simple graph with degree histogram exactly ``h`` and ``m = n + 1``.

    Havel-Hakimi gives a simple realisation; 2-swaps then merge components
    one at a time. Vertices are numbered by non-increasing degree.
    """
    if not bicyclic_realizable(h):
        raise ValueError(f"histogram {h} has no connected bicyclic realisation")
    seq = h.degree_sequence()
    g = Graph.from_edges(len(seq), havel_hakimi(seq))
    while True:
        comps = components(g)
        if len(comps) == 1:
            return g
        # m > n - c, so some component carries a cycle
        for comp in comps:
            ab = _cycle_edge(g, comp)
            if ab is not None:
                break
        else:  # pragma: no cover - excluded by the edge count
            raise AssertionError("disconnected realisation without a cycle")
        a, b = ab
        other = next(c for c in comps if a not in c)
        c, d = min(e for e in g.edges if e[0] in other)
        g = Graph.from_edges(g.n, (g.edges - {(a, b), (c, d)}) | {(a, c), (b, d)})
