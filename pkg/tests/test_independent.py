"""Independent-deletion solvers: odd cycle transversal machinery, the
edge-subdivision gadget, and the full dispatch against the oracle."""

import random

import pytest

from rlvd.deletion import ProblemSpec, SolverConfig
from rlvd.errors import ContractError, UnsupportedParametersError
from rlvd.graphs import (
    Bipartition,
    Graph,
    complete_graph,
    disjoint_union,
    induced_subgraph,
    two_coloring,
)
from rlvd.independent import (
    OCTWitness,
    hardness_gadget,
    independent_22,
    independent_oct,
    oct_auxiliary_graph,
    restricted_independent_oct,
    solve_ivd,
    solve_ivd_12,
)
from rlvd.oracle import brute_independent_oct, brute_oct, brute_vd
from rlvd.transversals import solve_oct

from conftest import ALL_CELLS, cycle_graph, path_graph, rand_graph


def _is_independent(g, s):
    s = set(s)
    return all(not (g.bits[v] >> w) & 1 for v in s for w in s if v < w)


def assert_valid(g, spec, sol):
    assert sol.feasible
    assert sol.size <= spec.k
    assert _is_independent(g, sol.deletion_set)
    rest = [v for v in range(g.n) if v not in set(sol.deletion_set)]
    from rlvd.partitions import verify_partition

    assert len(sol.witness.indep_classes) <= spec.r
    assert len(sol.witness.clique_classes) <= spec.l
    assert verify_partition(g, sol.witness, rest)


def _oct_witness(g, x):
    """Host-labeled 2-coloring witness for graph minus transversal x."""
    rest, back = induced_subgraph(g, [v for v in range(g.n) if v not in x])
    local = two_coloring(rest)
    return OCTWitness(
        x=x,
        sides=Bipartition(
            side_a=tuple(back[v] for v in local.side_a),
            side_b=tuple(back[v] for v in local.side_b),
        ),
    )


def test_oct_witness_validation():
    g = cycle_graph(5)
    x = solve_oct(g, 1)
    assert x is not None and len(x) == 1
    w = _oct_witness(g, x)
    assert w.validate(g)
    bad = OCTWitness(x=(), sides=w.sides)
    assert not bad.validate(g)
    with pytest.raises(ValueError):
        oct_auxiliary_graph(g, bad)


def test_auxiliary_graph_structure():
    g = cycle_graph(5)
    x = solve_oct(g, 1)
    aux = oct_auxiliary_graph(g, _oct_witness(g, x))
    assert aux.graph.n == g.n + len(x)
    assert two_coloring(aux.graph) is not None
    c1, c2 = aux.copy_pair(x[0])
    assert c1 == x[0] and c2 == g.n
    # Copies of the same vertex are never adjacent.
    assert not (aux.graph.bits[c1] >> c2) & 1


def test_independent_oct_known_instances():
    # C5: one deleted vertex leaves a path, and a single vertex is
    # trivially an independent set.
    assert independent_oct(cycle_graph(5), 0) is None
    z = independent_oct(cycle_graph(5), 1)
    assert z is not None and len(z) == 1
    # K4: every pair of vertices is adjacent, but killing all triangles
    # needs two deletions, so no independent solution exists.
    for k in range(5):
        assert independent_oct(complete_graph(4), k) is None
    # A triangle needs one deletion.
    z = independent_oct(cycle_graph(3), 1)
    assert z is not None and len(z) == 1


def test_independent_oct_oracle_sweep():
    rng = random.Random(301)
    for _ in range(150):
        n = rng.randrange(1, 8)
        g = rand_graph(rng, n, rng.choice((0.2, 0.4, 0.6)))
        k = rng.randrange(0, 4)
        z = independent_oct(g, k, minimize=True)
        ref = brute_independent_oct(g, k)
        assert (z is None) == (ref is None), (g.edges, k)
        if z is not None:
            assert len(z) == len(ref)
            assert _is_independent(g, z)


def test_independent_oct_twdp_backend_agrees():
    rng = random.Random(302)
    for _ in range(40):
        g = rand_graph(rng, rng.randrange(2, 7), 0.4)
        k = rng.randrange(0, 3)
        a = independent_oct(g, k)
        b = independent_oct(g, k, mincut_backend="twdp")
        assert (a is None) == (b is None)


def test_restricted_independent_oct_matches_oracle():
    rng = random.Random(303)
    for _ in range(100):
        n = rng.randrange(1, 7)
        g = rand_graph(rng, n, 0.4)
        d = tuple(sorted(rng.sample(range(n), rng.randrange(0, n + 1))))
        k = rng.randrange(0, 3)
        z = restricted_independent_oct(g, d, k)
        spec = ProblemSpec(r=2, l=0, k=k, independent=True, restricted=d)
        ref = brute_vd(g, spec)
        assert (z is None) == (ref is None), (g.edges, d, k)
        if z is not None:
            assert len(z) <= k and set(z) <= set(d)
            assert _is_independent(g, z)


def test_hardness_gadget_shape_and_equivalence():
    g = cycle_graph(5)
    k = 1
    gad = hardness_gadget(g, k)
    # Each edge becomes k+1 internally-disjoint length-3 paths.
    assert gad.graph.n == g.n + 2 * (k + 1) * len(g.edges)
    assert len(gad.paths) == len(g.edges)
    assert (solve_oct(g, k) is not None) == (
        independent_oct(gad.graph, k) is not None
    )


def test_hardness_gadget_random_equivalence():
    rng = random.Random(304)
    for _ in range(40):
        g = rand_graph(rng, rng.randrange(1, 7), 0.4)
        k = rng.randrange(0, 3)
        gad = hardness_gadget(g, k)
        assert (brute_oct(g, k) is not None) == (
            brute_independent_oct(gad.graph, k) is not None
        ), (g.edges, k)


def test_solve_ivd_12_matches_oracle():
    rng = random.Random(305)
    checked = 0
    for _ in range(200):
        g = rand_graph(rng, rng.randrange(1, 7), 0.5)
        k = rng.randrange(0, 3)
        spec = ProblemSpec(r=1, l=2, k=k, independent=True)
        sol = solve_ivd_12(g, k)
        ref = brute_vd(g, spec)
        assert sol.feasible == (ref is not None), (g.edges, k)
        if sol.feasible:
            assert_valid(g, spec, sol)
            checked += 1
    assert checked > 50


def test_independent_22_matches_oracle():
    rng = random.Random(306)
    for _ in range(120):
        g = rand_graph(rng, rng.randrange(1, 7), 0.5)
        k = rng.randrange(0, 3)
        spec = ProblemSpec(r=2, l=2, k=k, independent=True)
        sol = independent_22(g, k)
        ref = brute_vd(g, spec)
        assert sol.feasible == (ref is not None), (g.edges, k)
        if sol.feasible:
            assert_valid(g, spec, sol)


def test_dispatch_all_cells_small_sweep(graph_pool):
    for g in graph_pool[:35]:
        for r, l in ALL_CELLS:
            for k in (0, 1, 2):
                spec = ProblemSpec(r=r, l=l, k=k, independent=True)
                sol = solve_ivd(g, spec)
                ref = brute_vd(g, spec)
                assert sol.feasible == (ref is not None), (g.edges, r, l, k)
                if sol.feasible:
                    assert_valid(g, spec, sol)


def test_oracle_sweep_eight_nine_vertices():
    # First sizes where (2,2) membership itself can fail; covers
    # infeasible dispatch paths the n <= 7 catalogue cannot reach.
    rng = random.Random(1998)
    for i in range(40):
        n = 8 + (i % 2)
        g = rand_graph(rng, n, (0.2, 0.5, 0.8)[i % 3])
        for r, l in ALL_CELLS:
            for k in range(4):
                spec = ProblemSpec(r=r, l=l, k=k, independent=True)
                sol = solve_ivd(g, spec)
                ref = brute_vd(g, spec)
                assert sol.feasible == (ref is not None), (g.edges, r, l, k)
                if sol.feasible:
                    assert_valid(g, spec, sol)


def test_triangle_cannot_become_edgeless_independently():
    # Deleting two vertices of a triangle would require an adjacent pair.
    g = cycle_graph(3)
    for k in range(3):
        sol = solve_ivd(g, ProblemSpec(r=1, l=0, k=k, independent=True))
        assert not sol.feasible


def test_k4_separates_plain_from_independent():
    g = complete_graph(4)
    plain = brute_vd(g, ProblemSpec(r=2, l=0, k=2))
    assert plain is not None
    sol = solve_ivd(g, ProblemSpec(r=2, l=0, k=2, independent=True))
    assert not sol.feasible


def test_three_c5_independent():
    g = disjoint_union(
        disjoint_union(cycle_graph(5), cycle_graph(5)), cycle_graph(5)
    )
    spec0 = ProblemSpec(r=2, l=2, k=0, independent=True)
    assert not solve_ivd(g, spec0).feasible
    spec1 = ProblemSpec(r=2, l=2, k=1, independent=True)
    sol = solve_ivd(g, spec1)
    assert sol.feasible and sol.size == 1


def test_fast_paths_agree(graph_pool):
    slow = SolverConfig(fast_paths=False)
    for g in graph_pool[:25]:
        for r, l in ((1, 0), (2, 0)):
            for k in (0, 1, 2):
                spec = ProblemSpec(r=r, l=l, k=k, independent=True)
                a = solve_ivd(g, spec)
                b = solve_ivd(g, spec, slow)
                assert a.feasible == b.feasible, (g.edges, r, l, k)


def test_restricted_dispatch_cells():
    rng = random.Random(307)
    for _ in range(60):
        n = rng.randrange(1, 7)
        g = rand_graph(rng, n, 0.4)
        d = tuple(sorted(rng.sample(range(n), rng.randrange(0, n + 1))))
        k = rng.randrange(0, 3)
        for r, l in ((0, 0), (2, 0)):
            spec = ProblemSpec(
                r=r, l=l, k=k, independent=True, restricted=d
            )
            sol = solve_ivd(g, spec)
            ref = brute_vd(g, spec)
            assert sol.feasible == (ref is not None), (g.edges, d, r, l, k)
            if sol.feasible:
                assert set(sol.deletion_set) <= set(d)


def test_restricted_unsupported_cells_raise():
    spec = ProblemSpec(r=1, l=1, k=1, independent=True, restricted=(0,))
    with pytest.raises(UnsupportedParametersError):
        solve_ivd(path_graph(3), spec)


def test_plain_spec_rejected():
    with pytest.raises(ContractError):
        solve_ivd(path_graph(2), ProblemSpec(r=1, l=0, k=1))


def test_empty_graph_all_cells():
    g = Graph(0, [])
    for r, l in ALL_CELLS:
        sol = solve_ivd(g, ProblemSpec(r=r, l=l, k=0, independent=True))
        assert sol.feasible and sol.deletion_set == ()
