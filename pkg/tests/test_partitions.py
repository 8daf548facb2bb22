"""Partition witnesses, perturbations, and the coarse-split walk."""

import random

import pytest

from rlvd.errors import ContractError, UnsupportedParametersError
from rlvd.graphs import Graph, complete_graph, mask_of
from rlvd.oracle import brute_coarse_splits, brute_count_partitions
from rlvd.partitions import (
    Perturbation,
    RLPartition,
    apply_perturbation,
    enumerate_partitions,
    recognize,
    verify_partition,
)

from conftest import cycle_graph, path_graph, rand_graph


def test_partition_canonicalization():
    p = RLPartition(((2, 1), ()), ((3,),))
    assert p.indep_classes == ((1, 2), ())
    assert p.r == 2 and p.l == 1
    assert p.vertices() == (1, 2, 3)
    assert p.r_side() == (1, 2)
    assert p.l_side() == (3,)


def test_partition_rejects_overlaps_and_negatives():
    with pytest.raises(ValueError):
        RLPartition(((0, 1),), ((1,),))
    with pytest.raises(ValueError):
        RLPartition(((-1,),), ())


def test_partition_json_roundtrip():
    p = RLPartition(((0, 2),), ((1, 3),))
    assert RLPartition.from_json_dict(p.to_json_dict()) == p


def test_verify_partition():
    g = cycle_graph(5)
    good = RLPartition(((0, 2), (1, 4)), ((3,), ()))
    assert verify_partition(g, good)
    adjacent_pair = RLPartition(((0, 1), (2, 4)), ((3,), ()))
    assert not verify_partition(g, adjacent_pair)
    non_clique = RLPartition(((0, 2),), ((1, 3), (4,)))
    assert not verify_partition(g, non_clique)
    missing_vertex = RLPartition(((0, 2),), ((3,), (1,)))
    assert not verify_partition(g, missing_vertex)
    assert verify_partition(g, RLPartition(((0, 2),), ((1,), (3,))), (0, 1, 2, 3))


def test_apply_perturbation_moves_selected_vertices():
    g = path_graph(4)
    base = RLPartition(((0, 2), (1, 3)), ((), ()))
    pert = Perturbation(l_sel=(3,), r_sel=())
    moved = apply_perturbation(g, base, pert)
    assert moved is not None
    assert 3 in moved.l_side()
    assert set(moved.r_side()) == {0, 1, 2}


def test_enumerate_partitions_covers_every_coarse_split():
    rng = random.Random(77)
    checked = 0
    for _ in range(120):
        n = rng.randrange(1, 7)
        g = rand_graph(rng, n, rng.choice([0.3, 0.6]))
        for r, l in ((1, 1), (2, 2)):
            base = recognize(g, r, l)
            if base is None:
                continue
            got = {
                (mask_of(p.r_side()), mask_of(p.l_side()))
                for p in enumerate_partitions(g, base)
            }
            want = {
                (mask_of(rs), mask_of(ls))
                for rs, ls in brute_coarse_splits(g, r, l)
            }
            assert got == want, (g.edges, r, l)
            checked += 1
    assert checked > 60


def test_enumerate_partitions_base_split_first():
    g = cycle_graph(4)
    base = recognize(g, 2, 2)
    first = next(iter(enumerate_partitions(g, base)))
    assert mask_of(first.r_side()) == mask_of(base.r_side())


def test_enumerate_partitions_counts_match_known_values():
    assert brute_count_partitions(path_graph(3), 1, 1) == 3
    assert brute_count_partitions(Graph(1, []), 1, 1) == 2


def test_enumerate_rejects_bad_base():
    g = cycle_graph(5)
    bad = RLPartition(((0, 1),), ((2, 3, 4),))
    with pytest.raises(ContractError):
        list(enumerate_partitions(g, bad))


def test_recognize_named_graphs():
    c5 = cycle_graph(5)
    assert recognize(c5, 2, 0) is None
    part = recognize(c5, 2, 2)
    assert part is not None and verify_partition(c5, part)
    k5 = complete_graph(5)
    assert recognize(k5, 0, 1) is not None
    assert recognize(k5, 2, 0) is None
    split = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert recognize(split, 1, 1) is not None


def test_recognize_guards_unsupported_cells():
    with pytest.raises(UnsupportedParametersError):
        recognize(cycle_graph(4), 3, 0)
    with pytest.raises(UnsupportedParametersError):
        recognize(cycle_graph(4), 0, 3)
    with pytest.raises(UnsupportedParametersError):
        recognize(cycle_graph(4), -1, 1)


def test_every_small_graph_is_22():
    # graphs on up to seven vertices always admit a (2,2)-partition
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randrange(0, 8)
        g = rand_graph(rng, n, rng.random())
        assert recognize(g, 2, 2) is not None
