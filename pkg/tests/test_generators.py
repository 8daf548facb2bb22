"""Instance generators: determinism, planted guarantees, and the
exhaustive small-graph catalogue."""

import random

import pytest
from hypothesis import given, strategies as st

from rlvd.errors import SizeGuardError
from rlvd.generators import (
    NONISO_COUNTS,
    nonisomorphic_graphs,
    planted_instance,
    random_bipartite,
    random_graph,
)
from rlvd.graphs import two_coloring
from rlvd.kernels import canonical_form
from rlvd.oracle import brute_vd
from rlvd.partitions import verify_partition


def test_random_graph_determinism():
    a = random_graph(30, 0.3, seed=7)
    b = random_graph(30, 0.3, seed=7)
    c = random_graph(30, 0.3, seed=8)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_random_graph_extremes():
    assert random_graph(12, 0.0, seed=1).edges == ()
    full = random_graph(12, 1.0, seed=1)
    assert len(full.edges) == 12 * 11 // 2
    assert random_graph(0, 0.5, seed=1).n == 0


def test_random_graph_density_close_to_p():
    g = random_graph(300, 0.1, seed=3)
    m = len(g.edges)
    expect = 0.1 * 300 * 299 / 2
    assert 0.7 * expect < m < 1.3 * expect


def test_random_bipartite_sides():
    g = random_bipartite(8, 5, 0.7, seed=2)
    assert g.n == 13
    for u, v in g.edges:
        assert (u < 8) != (v < 8)
    assert two_coloring(g) is not None


def test_planted_instance_guarantee():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randrange(4, 13)
        r = rng.randrange(0, 3)
        l = rng.randrange(0, 3)
        k = rng.randrange(0, min(3, n - 2) + 1)
        if r == 0 and l == 0 and n > k:
            continue
        inst = planted_instance(n, r, l, k, p=0.4, seed=rng.randrange(9999))
        assert inst.graph.n == n
        assert inst.spec.r == r and inst.spec.l == l and inst.spec.k == k
        assert len(inst.spoilers) == k
        rest = [v for v in range(n) if v not in set(inst.spoilers)]
        assert verify_partition(inst.graph, inst.base_partition, rest)
        assert inst.planted_k() <= k


def test_planted_independent_spoilers_pairwise_nonadjacent():
    for seed in range(15):
        inst = planted_instance(
            10, 2, 2, 3, p=0.5, seed=seed, independent=True
        )
        s = inst.spoilers
        for i, u in enumerate(s):
            for v in s[i + 1 :]:
                assert not inst.graph.has_edge(u, v)


def test_planted_solvable_at_k(graph_pool):
    for seed in range(10):
        inst = planted_instance(9, 2, 2, 2, p=0.4, seed=seed)
        assert brute_vd(inst.graph, inst.spec) is not None


def test_planted_determinism():
    a = planted_instance(10, 2, 1, 2, p=0.3, seed=5)
    b = planted_instance(10, 2, 1, 2, p=0.3, seed=5)
    assert a.graph.edges == b.graph.edges
    assert a.spoilers == b.spoilers


def test_noniso_counts_small():
    for n in range(7):
        got = nonisomorphic_graphs(n)
        assert len(got) == NONISO_COUNTS[n], n


def test_noniso_graphs_pairwise_distinct():
    got = nonisomorphic_graphs(5)
    keys = {canonical_form(g.n, g.bits) for g in got}
    assert len(keys) == len(got)


def test_noniso_guard():
    with pytest.raises(SizeGuardError):
        nonisomorphic_graphs(8)


@given(st.integers(0, 40), st.floats(0.0, 1.0), st.integers(0, 2**30))
def test_random_graph_always_simple(n, p, seed):
    g = random_graph(n, p, seed=seed)
    assert all(u < v < g.n for u, v in g.edges)
    assert len(set(g.edges)) == len(g.edges)
