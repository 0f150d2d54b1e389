import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from findex.enumeration import EnumSpec, enumerate_bicyclic
from findex.graph import Graph, components, forgotten_index, is_bicyclic
from findex.histogram import DegreeHistogram, f_from_histogram, histogram_from_graph
from findex.realization import bicyclic_realizable, erdos_gallai, havel_hakimi, realize


def H(*counts):
    return DegreeHistogram(len(counts), counts)


@pytest.mark.parametrize("seq,ok", [
    ((2, 2, 2), True),
    ((4, 4, 3, 2, 1, 1, 1), True),
    ((5, 5, 4, 1, 1, 1, 1, 1, 1), False),
    ((4, 4, 4, 3, 1, 1, 1, 1, 1), True),
    ((3, 3, 3, 1, 1, 1, 1), False),  # odd degree sum
    ((3, 3, 3, 3, 1, 1), True),
    ((1,), False),
    ((), True),
])
def test_erdos_gallai_examples(seq, ok):
    assert erdos_gallai(seq) is ok


def test_erdos_gallai_failing_prefix():
    # q=3: 14 > 3*2 + 6
    d = [5, 5, 4, 1, 1, 1, 1, 1, 1]
    assert sum(d[:3]) == 14 and 3 * 2 + sum(min(x, 3) for x in d[3:]) == 12


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=0, max_size=10))
def test_erdos_gallai_matches_networkx(seq):
    assert erdos_gallai(seq) == nx.is_graphical(seq, method="eg")


@pytest.mark.parametrize("n", range(1, 7))
def test_erdos_gallai_exhaustive(n):
    m = n + 1
    real = oracles.graphical_sequences(n, m) if m <= n * (n - 1) // 2 else set()
    for seq in oracles.nonincreasing_sequences(n, 2 * m, 2 * m):
        assert erdos_gallai(seq) == (seq in real), seq


@pytest.mark.parametrize("h,ok", [
    (H(5, 0, 1, 3), True),
    (H(6, 0, 0, 1, 2), False),
    (H(4, 0, 0, 3), False),
    (H(0, 5), False),
])
def test_bicyclic_realizable(h, ok):
    assert bicyclic_realizable(h) is ok


def test_realizable_matches_enumerated_histograms():
    for n in range(4, 8):
        for delta in range(3, n):
            seen = set()
            enumerate_bicyclic(EnumSpec(n, delta_exact=delta, dedup=True),
                               lambda g: seen.add(histogram_from_graph(g).counts))
            claimed = {c for c in oracles.feasible_histograms(n, delta)
                       if bicyclic_realizable(DegreeHistogram(delta, c))}
            assert seen == claimed, (n, delta)


@pytest.mark.parametrize("h", [H(5, 0, 1, 3), H(0, 4, 0, 1)])
def test_realize_examples(h):
    g = realize(h)
    assert is_bicyclic(g)
    assert histogram_from_graph(g) == h
    assert g.m == h.n + 1
    assert forgotten_index(g) == f_from_histogram(h)
    assert realize(h) == g


def test_realize_rejects():
    with pytest.raises(ValueError):
        realize(H(0, 5))
    with pytest.raises(ValueError):
        realize(H(6, 0, 0, 1, 2))


def test_realize_every_realizable_histogram():
    for delta in range(3, 7):
        for n in range(delta + 1, 13):
            for c in oracles.feasible_histograms(n, delta):
                h = DegreeHistogram(delta, c)
                if not bicyclic_realizable(h):
                    continue
                g = realize(h)
                assert is_bicyclic(g) and histogram_from_graph(g) == h


@pytest.mark.parametrize("h", [H(2, 0, 4), H(0, 7, 2), H(3, 0, 5)])
def test_realize_connects_split_havel_hakimi(h):
    plain = Graph.from_edges(h.n, havel_hakimi(h.degree_sequence()))
    assert len(components(plain)) > 1  # K4 plus a separate piece, etc.
    g = realize(h)
    assert is_bicyclic(g) and histogram_from_graph(g) == h
