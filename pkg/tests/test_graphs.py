import pytest
from hypothesis import given, strategies as st

from symcoset import Graph, ParseError, read_edge_list
from symcoset.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    hypercube,
    path_graph,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


def test_basic_counts():
    assert complete_graph(5).edge_count == 10
    assert cycle_graph(6).valency() == 2
    assert path_graph(4).valency() is None
    assert complete_bipartite(3, 3).valency() == 3
    assert hypercube(3).edge_count == 12
    assert Graph(3, []).valency() == 0
    assert disjoint_union(cycle_graph(3), cycle_graph(4)).vertex_count == 7


def test_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1
    assert g.has_edge(1, 0) and not g.has_edge(1, 2)


def test_edge_list_format():
    text = cycle_graph(4).to_edge_list()
    assert text == "# vertices 4\n1 2\n1 4\n2 3\n3 4\n"
    assert read_edge_list(text) == cycle_graph(4)
    assert read_edge_list("# vertices 5\n1 2\n").vertex_count == 5
    assert read_edge_list("1 3\n").vertex_count == 3


@pytest.mark.parametrize("text", ["1\n", "0 1\n", "# vertices 2\n1 3\n", "a b\n", "2 2\n"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        read_edge_list(text)


def test_dot_export():
    dot = Graph(2, [(0, 1)], labels=["a", "b"]).to_dot()
    assert dot.startswith("graph G {") and '1 [label="a"];' in dot and "1 -- 2;" in dot


def test_relabel_moves_labels():
    g = Graph(3, [(0, 1)], labels=["x", "y", "z"])
    h = g.relabel([2, 0, 1])
    assert h.has_edge(2, 0)
    assert h.labels == ("y", "z", "x")
    with pytest.raises(ValueError):
        g.relabel([0, 0, 1])


@given(graphs())
def test_edge_list_round_trip(g):
    assert read_edge_list(g.to_edge_list()) == g


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.edge_count
    assert int(g.indptr[-1]) == len(g.indices)


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert h.edge_count == g.edge_count
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
