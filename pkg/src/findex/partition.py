"""Dominant partitions, residue/case parameters and histogram maximisation.

``exact_histogram_max`` is the relaxation oracle: it maximises the sum of
``i^3 * n_i`` over every histogram satisfying the two bicyclic counting
identities, with no regard for whether a graph realises it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .histogram import DegreeHistogram, check_bicyclic_identities, f_from_histogram

log = logging.getLogger(__name__)


class NoMajorSequence(ValueError):
    """The closed-form optimum tuple is not defined for these parameters."""


@dataclass(frozen=True)
class ResidueParams:
    n: int
    delta: int
    k: int
    p: int


@dataclass(frozen=True)
class CaseParams:
    r: int
    t: int
    s: int


def dominant_partition(total: int, delta: int) -> tuple[int, ...]:
    """As many parts equal to ``delta`` as possible, then the remainder."""
    if total < 1 or delta < 1:
        raise ValueError("total and delta must be positive")
    t, b = divmod(total, delta)
    return (delta,) * t + ((b,) if b else ())


def residue_params(n: int, delta: int) -> ResidueParams:
    if delta < 3:
        raise ValueError(f"delta must be >= 3 for bicyclic graphs, got {delta}")
    if n < delta + 1:
        raise ValueError(f"need n >= delta + 1 (got n={n}, delta={delta})")
    k, p = divmod(n, delta - 1)
    return ResidueParams(n, delta, k, p)


def r_value(h: DegreeHistogram, params: ResidueParams) -> int:
    """Case selector ``r``; equals ``k - n_delta`` for any bicyclic histogram."""
    if h.delta != params.delta:
        raise ValueError(f"histogram delta {h.delta} != {params.delta}")
    num = sum((i - 1) * h.count(i) for i in range(2, h.delta)) - (params.p + 2)
    r, rem = divmod(num, params.delta - 1)
    if rem:
        raise ValueError(f"histogram {h} violates the bicyclic identities")
    return r


def case_params(h: DegreeHistogram, params: ResidueParams) -> CaseParams:
    """``r`` plus the split ``p + r + 2 = t (delta - 2) + s``."""
    r = r_value(h, params)
    t, s = divmod(params.p + r + 2, params.delta - 2)
    return CaseParams(r, t, s)


def paper_major_sequence(params: ResidueParams) -> DegreeHistogram:
    """The claimed optimum: ``n_delta = k``, one vertex of degree ``p + 3``, the rest leaves."""
    n, delta, k, p = params.n, params.delta, params.k, params.p
    if p > delta - 3:
        raise NoMajorSequence(f"p={p} > delta-3={delta - 3}: no closed-form optimum")
    if p + 3 == delta:
        raise NoMajorSequence(f"degree p+3={p + 3} collides with delta")
    leaves = n - k - 1
    if leaves < 0:
        raise NoMajorSequence(f"n={n} too small for the tuple shape")
    counts = [0] * delta
    counts[0] = leaves
    counts[p + 2] += 1
    counts[delta - 1] += k
    h = DegreeHistogram(delta, tuple(counts))
    assert check_bicyclic_identities(h), h
    return h


def exact_histogram_max(params: ResidueParams) -> tuple[DegreeHistogram, int]:
    """Exhaustive maximiser of ``F`` over histograms with the bicyclic identities.

    Ties are broken towards the lexicographically largest ``(n_delta, n_{delta-1}, ...)``.
    """
    n, delta = params.n, params.delta
    need = n + 2  # sum over i >= 2 of (i - 1) * n_i

    # best(i, w, c): best sum of (j^3 - 1) n_j over degrees 2..i with
    # sum (j - 1) n_j == w using at most c vertices; None if infeasible
    @lru_cache(maxsize=None)
    def best(i: int, w: int, c: int):
        if w == 0:
            return 0, (0,) * (i - 1)
        if i < 2:
            return None
        unit = i - 1
        top = min(w // unit, c)
        result = None
        for cnt in range(top, -1, -1):
            sub = best(i - 1, w - cnt * unit, c - cnt)
            if sub is None:
                continue
            val = cnt * (i**3 - 1) + sub[0]
            if result is None or val > result[0]:
                result = (val, (cnt,) + sub[1])
        return result

    result = None
    unit = delta - 1
    for n_top in range(min(need // unit, n), 0, -1):
        sub = best(delta - 1, need - n_top * unit, n - n_top)
        if sub is None:
            continue
        val = n_top * (delta**3 - 1) + sub[0]
        if result is None or val > result[0]:
            result = (val, (n_top,) + sub[1])
    if result is None:
        raise ValueError(f"no feasible histogram for n={n}, delta={delta}")

    upper = result[1]  # (n_delta, ..., n_2)
    n1 = n - sum(upper)
    h = DegreeHistogram(delta, (n1,) + tuple(reversed(upper)))
    value = f_from_histogram(h)
    assert value == n + result[0]
    return h, value


@dataclass(frozen=True)
class CorollaryGap:
    params: ResidueParams
    tuple_value: int
    oracle_value: int
    oracle_argmax: DegreeHistogram


def corollary_gaps(n_max: int = 60, delta_max: int = 10) -> list[CorollaryGap]:
    """Parameters where the closed-form optimum tuple misses the oracle's maximum."""
    gaps = []
    for delta in range(3, delta_max + 1):
        for n in range(delta + 1, n_max + 1):
            params = residue_params(n, delta)
            try:
                h = paper_major_sequence(params)
            except NoMajorSequence:
                continue
            arg, val = exact_histogram_max(params)
            if f_from_histogram(h) != val:
                gap = CorollaryGap(params, f_from_histogram(h), val, arg)
                log.warning("Corollary gap at n=%d delta=%d: tuple %d, oracle %d",
                            n, delta, gap.tuple_value, val)
                gaps.append(gap)
    return gaps
