"""Exhaustive generation of connected graphs with ``m = n + 1`` edges.

Graphs are built one adjacency row at a time: row ``u`` picks the neighbours
of ``u`` among ``u+1..n-1``, after which the degree of ``u`` is final. Three
visiting modes are supported:

* labeled: every labeled graph exactly once;
* symmetry-broken: only labelings with non-increasing degrees, so every
  isomorphism class appears at least once (enough for maxima);
* dedup: only the canonical labeling of each class, exactly once.

Canonical form: among labelings whose vertex order respects a degree-seeded
refinement of the vertex partition, the one with the smallest graph6 bit
string (column by column).
"""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graph import Graph
from .io import from_graph6, to_graph6

log = logging.getLogger(__name__)

DEFAULT_CAP = 9


class EnumerationBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    n: int
    delta_exact: int | None = None
    delta_max: int | None = None
    dedup: bool = False
    symmetry_break: bool = False
    parallel_jobs: int = 1

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"bicyclic graphs need n >= 4, got {self.n}")
        if self.delta_exact is not None and not 3 <= self.delta_exact <= self.n - 1:
            raise ValueError(f"delta_exact must lie in [3, {self.n - 1}]")
        if self.delta_exact is not None and self.delta_max is not None:
            raise ValueError("give delta_exact or delta_max, not both")

    @property
    def cap(self) -> int:
        if self.delta_exact is not None:
            return self.delta_exact
        if self.delta_max is not None:
            return min(self.delta_max, self.n - 1)
        return self.n - 1

    @property
    def sorted_degrees(self) -> bool:
        return self.dedup or self.symmetry_break


@dataclass(frozen=True)
class EnumSummary:
    count: int
    max_f: int | None
    argmax: tuple[str, ...]  # canonical graph6 of every maximiser class, sorted

    @property
    def witness(self) -> Graph | None:
        return from_graph6(self.argmax[0]) if self.argmax else None


# -- canonical form ---------------------------------------------------------

def _masks(g: Graph) -> list[int]:
    out = [0] * g.n
    for u, v in g.edges:
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _refined_cells(n: int, adj: list[int]) -> list[int]:
    """Cell index per vertex; cells ordered by descending degree, then refined."""
    deg = [bin(a).count("1") for a in adj]
    cell = [-d for d in deg]
    ncells = -1
    while True:
        keys = []
        for v in range(n):
            nb, row = [], adj[v]
            while row:
                b = row & -row
                row ^= b
                nb.append(cell[b.bit_length() - 1])
            keys.append((cell[v], tuple(sorted(nb))))
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        cell = [ranks[k] for k in keys]
        if len(ranks) == ncells:
            return cell
        ncells = len(ranks)


def _search_min(n: int, adj: list[int], cell: list[int], bound: list[int] | None,
                stop_below: bool):
    """Depth-first search over cell-respecting labelings for the smallest columns.

    Column ``j`` of a labeling holds the adjacency bits between position ``j``
    and positions ``0..j-1``. Starting from ``bound`` (or nothing), return the
    best ``(columns, order)`` found strictly below it; with ``stop_below`` the
    search returns at the first improvement.
    """
    slot_cell = sorted(cell)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(cell[v], []).append(v)
    best = list(bound) if bound is not None else None
    best_order: list[int] | None = None
    order: list[int] = []
    cols: list[int] = []
    used = 0

    def rec(j: int) -> bool:
        nonlocal best, best_order, used
        if j == n:
            if best is None or cols < best:
                best, best_order = list(cols), list(order)
                return stop_below
            return False
        for x in members[slot_cell[j]]:
            if used >> x & 1:
                continue
            col = 0
            row = adj[x]
            for i in range(j):
                col = (col << 1) | (row >> order[i] & 1)
            # explored prefixes never exceed best's prefix; prune once they would
            if best is not None and col > best[j] and cols == best[:j]:
                continue
            order.append(x)
            cols.append(col)
            used |= 1 << x
            done = rec(j + 1)
            used ^= 1 << x
            cols.pop()
            order.pop()
            if done:
                return True
        return False

    rec(0)
    return best, best_order


def canonical_graph(g: Graph) -> Graph:
    adj = _masks(g)
    cell = _refined_cells(g.n, adj)
    _, order = _search_min(g.n, adj, cell, None, False)
    if order is None:
        return g
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


def _is_canonical(n: int, adj: list[int]) -> bool:
    cell = _refined_cells(n, adj)
    if any(cell[v] > cell[v + 1] for v in range(n - 1)):
        return False
    own = []
    for j in range(n):
        col = 0
        for i in range(j):
            col = (col << 1) | (adj[j] >> i & 1)
        own.append(col)
    better, _ = _search_min(n, adj, cell, own, True)
    return better == own


def is_canonical(g: Graph) -> bool:
    return _is_canonical(g.n, _masks(g))


# -- search core ------------------------------------------------------------

def _row0_choices(spec: EnumSpec) -> list[tuple[int, ...]]:
    n, cap, m = spec.n, spec.cap, spec.n + 1
    if spec.sorted_degrees and spec.delta_exact is not None:
        sizes = [spec.delta_exact]
    else:
        sizes = range(1, min(cap, m) + 1)
    return [S for r in sizes for S in combinations(range(1, n), r)]


def _search(spec: EnumSpec, row0: tuple[int, ...], leaf: Callable[[list[int], list[int]], None]):
    """Visit every graph whose vertex-0 neighbourhood is ``row0``."""
    n, cap = spec.n, spec.cap
    sort = spec.sorted_degrees
    full = (1 << n) - 1
    deg = [0] * n
    adj = [0] * n

    def closed_off(u: int) -> bool:
        # the component of u lies inside 0..u (so can never grow) yet is not everything
        low = (1 << (u + 1)) - 1
        if adj[u] & ~low:
            return False
        mask = frontier = 1 << u
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nb = adj[b.bit_length() - 1] & ~mask
            if nb & ~low:
                return False
            mask |= nb
            frontier |= nb
        return mask != full

    def place(u: int, S, dd: int) -> bool:
        ok = True
        for v in S:
            deg[v] += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if deg[v] > cap or (sort and deg[v] > dd):
                ok = False
        deg[u] = dd
        return ok

    def unplace(u: int, S, d0: int):
        for v in S:
            deg[v] -= 1
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
        deg[u] = d0

    def rec(u: int, left: int, prev: int):
        if u == n - 1:
            if left == 0 and 1 <= deg[u] <= prev and not closed_off(u):
                leaf(deg, adj)
            return
        d0 = deg[u]
        hi = min(cap, prev)
        cand = [v for v in range(u + 1, n) if deg[v] < hi]
        spare = (n - u - 1) * (n - u - 2) // 2
        for r in range(max(0, 1 - d0), min(hi - d0, left, len(cand)) + 1):
            if left - r > spare:
                continue
            dd = d0 + r
            for S in combinations(cand, r):
                if place(u, S, dd) and not closed_off(u):
                    rec(u + 1, left - r, dd if sort else n)
                unplace(u, S, d0)

    r0 = len(row0)
    if r0 > cap or r0 < 1:
        return
    if place(0, row0, r0) and not closed_off(0):
        rec(1, n + 1 - r0, r0 if sort else n)
    unplace(0, row0, 0)


def _part_summary(spec: EnumSpec, rows: list[tuple[int, ...]], visitor=None):
    n = spec.n
    state = {"count": 0, "best": None, "maxers": set()}

    def leaf(deg, adj):
        if spec.delta_exact is not None and max(deg) != spec.delta_exact:
            return
        if spec.dedup and not _is_canonical(n, adj):
            return
        state["count"] += 1
        f = sum(d * d * d for d in deg)
        g = None
        if visitor is not None:
            g = _graph_from_masks(n, adj)
            visitor(g)
        best = state["best"]
        if best is None or f >= best:
            if best is None or f > best:
                state["best"] = f
                state["maxers"] = set()
            g = g or _graph_from_masks(n, adj)
            state["maxers"].add(to_graph6(g) if spec.dedup else canonical_graph6(g))

    for row0 in rows:
        _search(spec, row0, leaf)
    return state["count"], state["best"], state["maxers"]


def _graph_from_masks(n: int, adj: list[int]) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


def _merge(parts) -> EnumSummary:
    count, best, maxers = 0, None, set()
    for c, b, ms in parts:
        count += c
        if b is None:
            continue
        if best is None or b > best:
            best, maxers = b, set(ms)
        elif b == best:
            maxers |= ms
    return EnumSummary(count, best, tuple(sorted(maxers)))


def _chunks(items: list, jobs: int) -> list[list]:
    # round-robin keeps the partition fixed for a given job count; merge is order-free anyway
    k = max(1, min(jobs * 4, len(items)))
    return [items[i::k] for i in range(k)]


def enumerate_bicyclic(spec: EnumSpec, visitor: Callable[[Graph], None] | None = None, *,
                       cap: int = DEFAULT_CAP, executor: Executor | None = None) -> EnumSummary:
    """Visit bicyclic graphs on ``spec.n`` vertices and summarise their F values.

    ``visitor`` runs in-process only, so it cannot be combined with an executor
    or more than one job.
    """
    if spec.n > cap:
        raise EnumerationBudgetError(f"n={spec.n} exceeds enumeration cap {cap}")
    rows = _row0_choices(spec)
    jobs = spec.parallel_jobs
    if visitor is not None and (executor is not None or jobs > 1):
        raise ValueError("a visitor requires single-process enumeration")
    if executor is None and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return enumerate_bicyclic(spec, cap=cap, executor=pool)
    if executor is None:
        return _merge([_part_summary(spec, rows, visitor)])
    chunks = _chunks(rows, jobs)
    futures = [executor.submit(_part_summary, spec, ch) for ch in chunks]
    parts = []
    for i, fut in enumerate(futures, 1):
        parts.append(fut.result())
        log.debug("n=%d: %d/%d partitions done", spec.n, i, len(futures))
    return _merge(parts)
