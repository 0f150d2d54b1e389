"""Brute-force reference computations, deliberately naive and independent of findex."""

from itertools import combinations


def all_pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def connected(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(n)}) == 1


def degrees(n, edges):
    d = [0] * n
    for u, v in edges:
        d[u] += 1
        d[v] += 1
    return d


def labeled_bicyclic(n):
    """Every labeled connected graph on n vertices with n + 1 edges."""
    for edges in combinations(all_pairs(n), n + 1):
        if connected(n, edges):
            yield edges


def brute_max_f(n, delta):
    """(max F, count) over labeled bicyclic graphs with max degree exactly delta."""
    best, count = None, 0
    for edges in labeled_bicyclic(n):
        d = degrees(n, edges)
        if max(d) != delta:
            continue
        count += 1
        f = sum(x**3 for x in d)
        best = f if best is None else max(best, f)
    return best, count


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def feasible_histograms(n, delta):
    """All (n_1..n_delta) with sum n, degree sum 2n+2 and n_delta >= 1."""
    for c in compositions(n, delta):
        if c[-1] >= 1 and sum((i + 1) * x for i, x in enumerate(c)) == 2 * n + 2:
            yield c


def graphical_sequences(n, m):
    """Sorted degree sequences of all labeled graphs with n vertices and m edges."""
    return {tuple(sorted(degrees(n, e), reverse=True)) for e in combinations(all_pairs(n), m)}


def nonincreasing_sequences(length, total, top):
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(top, total), -1, -1):
        for rest in nonincreasing_sequences(length - 1, total - first, first):
            yield (first,) + rest
