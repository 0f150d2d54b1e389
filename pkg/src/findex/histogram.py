"""Degree-count histograms for bicyclic graphs.

For a connected graph with ``m = n + 1`` edges the handshake lemma gives

    sum_i i * n_i = 2n + 2      and      sum_{i>=2} (i - 1) * n_i = n + 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, max_degree


@dataclass(frozen=True)
class DegreeHistogram:
    """Counts ``(n_1, ..., n_delta)``; ``counts[i - 1]`` is the number of degree-i vertices."""

    delta: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if self.delta < 1:
            raise ValueError(f"delta must be >= 1, got {self.delta}")
        if len(self.counts) != self.delta:
            raise ValueError(f"expected {self.delta} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in {self.counts}")
        if self.counts[-1] < 1:
            raise ValueError("maximum degree must be attained (n_delta >= 1)")

    @classmethod
    def from_degrees(cls, degrees) -> "DegreeHistogram":
        delta = max(degrees)
        if min(degrees) < 1:
            raise ValueError("degree-0 vertices are not allowed in a histogram")
        counts = [0] * delta
        for d in degrees:
            counts[d - 1] += 1
        return cls(delta, tuple(counts))

    @property
    def n(self) -> int:
        return sum(self.counts)

    def count(self, degree: int) -> int:
        """``n_degree``, zero outside ``1..delta``."""
        return self.counts[degree - 1] if 1 <= degree <= self.delta else 0

    def degree_sum(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts, start=1))

    def degree_sequence(self) -> list[int]:
        """Non-increasing degree list."""
        return [i for i in range(self.delta, 0, -1) for _ in range(self.count(i))]

    def to_json(self) -> dict:
        return {"delta": self.delta, "counts": list(self.counts)}

    @classmethod
    def from_json(cls, obj: dict) -> "DegreeHistogram":
        return cls(obj["delta"], tuple(obj["counts"]))

    def __str__(self):
        return ",".join(map(str, self.counts))


def histogram_from_graph(g: Graph) -> DegreeHistogram:
    if g.m == 0:
        raise ValueError("graph has no edges")
    deg = g.degrees()
    if 0 in deg:
        raise ValueError(f"vertex {deg.index(0)} is isolated")
    assert max(deg) == max_degree(g)
    return DegreeHistogram.from_degrees(deg)


def identity_failures(h: DegreeHistogram) -> list[str]:
    """Human-readable list of violated bicyclic counting identities (empty if none)."""
    n = h.n
    out = []
    if h.degree_sum() != 2 * n + 2:
        out.append(f"sum i*n_i = {h.degree_sum()} != 2n+2 = {2 * n + 2}")
    excess = sum((i - 1) * h.count(i) for i in range(2, h.delta + 1))
    if excess != n + 2:
        out.append(f"sum (i-1)*n_i = {excess} != n+2 = {n + 2}")
    return out


def check_bicyclic_identities(h: DegreeHistogram) -> bool:
    return not identity_failures(h)


def f_from_histogram(h: DegreeHistogram) -> int:
    return sum(i**3 * c for i, c in enumerate(h.counts, start=1))


def delta_partition(h: DegreeHistogram) -> tuple[int, ...]:
    """Parts ``i - 1`` repeated ``n_i`` times for ``i = 2..delta``, non-increasing."""
    return tuple(i - 1 for i in range(h.delta, 1, -1) for _ in range(h.count(i)))
