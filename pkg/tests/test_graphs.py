"""Graph container, IO, and basic helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rlvd.errors import ParseError
from rlvd.graphs import (
    Bipartition,
    Graph,
    classify_set,
    complement,
    complete_graph,
    connected_components,
    disjoint_union,
    induced_subgraph,
    mask_of,
    parse_graph,
    to_dimacs,
    to_edgelist,
    two_coloring,
    verts_of,
)

from conftest import cycle_graph, path_graph, rand_graph


def small_graphs():
    return st.integers(0, 7).flatmap(
        lambda n: st.builds(
            Graph,
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
                .filter(lambda e: e[0] != e[1]),
                max_size=12,
            ),
        )
        if n > 0
        else st.just(Graph(0, []))
    )


def test_duplicate_and_reversed_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))


def test_loops_and_range_violations_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_bits_and_cobits():
    g = path_graph(3)
    assert g.bits == (0b010, 0b101, 0b010)
    assert g.cobits == (0b100, 0b000, 0b001)


def test_mask_helpers_roundtrip():
    assert verts_of(mask_of([4, 1, 1])) == (1, 4)
    assert mask_of(()) == 0
    assert verts_of(0) == ()


@given(small_graphs())
def test_complement_is_involutive(g):
    assert complement(complement(g)) == g


@given(small_graphs())
def test_complement_edge_counts(g):
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_connected_components():
    g = disjoint_union(path_graph(3), cycle_graph(3))
    assert connected_components(g) == ((0, 1, 2), (3, 4, 5))
    assert connected_components(Graph(0, [])) == ()


def test_induced_subgraph_relabels():
    g = cycle_graph(5)
    sub, vmap = induced_subgraph(g, (1, 2, 4))
    assert vmap == (1, 2, 4)
    assert sub.n == 3
    assert sub.edges == ((0, 1),)


def test_two_coloring_even_cycle():
    col = two_coloring(cycle_graph(6))
    assert col is not None
    assert col.side_a == (0, 2, 4)
    assert col.side_b == (1, 3, 5)
    assert two_coloring(cycle_graph(5)) is None


def test_two_coloring_smallest_vertex_lands_on_side_a():
    g = disjoint_union(path_graph(2), path_graph(2))
    col = two_coloring(g)
    assert 0 in col.side_a and 2 in col.side_a


def test_classify_set():
    g = cycle_graph(4)
    assert classify_set(g, [0, 2]) == "independent"
    assert classify_set(g, [0, 1]) == "clique"
    assert classify_set(g, [0, 1, 2]) == "neither"
    assert classify_set(g, [3]) == "both"
    assert classify_set(g, []) == "both"
    with pytest.raises(ValueError):
        classify_set(g, [9])


def test_complete_graph():
    k4 = complete_graph(4)
    assert k4.m == 6
    assert classify_set(k4, range(4)) == "clique"


def test_parse_dimacs():
    g = parse_graph("c comment\np edge 4 2\ne 1 2\ne 3 4\n")
    assert g.n == 4
    assert g.edges == ((0, 1), (2, 3))


def test_parse_dimacs_errors():
    with pytest.raises(ParseError):
        parse_graph("e 1 2\n")  # edge before header
    with pytest.raises(ParseError):
        parse_graph("p edge 2 1\np edge 2 1\n")
    with pytest.raises(ParseError):
        parse_graph("p edge 2 1\ne 1 5\n")
    with pytest.raises(ParseError):
        parse_graph("p foo 2 1\n")


def test_parse_edgelist_duplicates_collapse():
    g = parse_graph("0 1\n1 0\n", fmt="edgelist")
    assert g.n == 2
    assert g.edges == ((0, 1),)


def test_parse_edgelist_explicit_n():
    g = parse_graph("0 1\n", fmt="edgelist", n=5)
    assert g.n == 5


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph("", fmt="gml")


@given(small_graphs())
def test_dimacs_roundtrip(g):
    assert parse_graph(to_dimacs(g)) == g


@given(small_graphs())
def test_edgelist_roundtrip_preserves_edges(g):
    back = parse_graph(to_edgelist(g), fmt="edgelist", n=g.n)
    assert back == g


def test_bipartition_fields():
    b = Bipartition((0, 2), (1,))
    assert b.side_a == (0, 2) and b.side_b == (1,)


def test_graph_equality_and_hash():
    a = Graph(3, [(0, 1)])
    b = Graph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(0, 2)])
    assert a != Graph(4, [(0, 1)])
