import random
import time
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from symcoset import (
    CosetGraphSpec,
    Graph,
    NotRegular,
    are_isomorphic,
    automorphism_group,
    build_coset_graph,
    canonical_form,
    cayley_graph,
    connected_components,
    is_normal_cayley,
    parse_cycles,
    s_arc_transitivity,
    sylow7,
)
from symcoset.analysis import automorphism_generators, s_arcs
from symcoset.cosets import ActionHomomorphism
from symcoset.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    hypercube,
    path_graph,
)
from symcoset.models import alternating, cyclic, symmetric
from test_graphs import graphs


def petersen():
    pairs = list(combinations(range(5), 2))
    return Graph(10, [(i, j) for i, a in enumerate(pairs) for j, b in enumerate(pairs)
                      if i < j and not set(a) & set(b)])


def prism():
    # K4 x K2 is not the cube; the cube is C4 x K2
    c4 = cycle_graph(4)
    edges = c4.edges() + [(u + 4, v + 4) for u, v in c4.edges()] + [(i, i + 4) for i in range(4)]
    return Graph(8, edges)


def brute_automorphisms(g):
    n = g.vertex_count
    return [p for p in permutations(range(n)) if g.preserves(p)]


def shuffled(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    return g.relabel(perm)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


def test_components():
    g = disjoint_union(cycle_graph(3), path_graph(2), Graph(1, []))
    assert connected_components(g) == [[0, 1, 2], [3, 4], [5]]


@pytest.mark.parametrize("graph,order", [
    (complete_graph(8), 40320),
    (cycle_graph(6), 12),
    (path_graph(3), 2),
    (hypercube(3), 48),
    (complete_bipartite(3, 3), 72),
    (Graph(5, []), 120),
    (petersen(), 120),
    (Graph(0, []), 1),
])
def test_automorphism_orders(graph, order):
    A = automorphism_group(graph)
    assert A.order() == order
    assert all(graph.preserves(a) for a in automorphism_generators(graph))


def test_k8_is_fast():
    t = time.perf_counter()
    assert automorphism_group(complete_graph(8)).order() == 40320
    assert time.perf_counter() - t < 1.0


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_automorphisms_match_brute_force(g):
    brute = brute_automorphisms(g)
    A = automorphism_group(g)
    assert A.order() == len(brute)
    members = set(A.raw_elements()) if g.vertex_count else {()}
    assert members == set(brute) or g.vertex_count == 0


def test_canonical_form_invariant_under_relabelings():
    r = random.Random(5)
    A7 = alternating(7)
    coset, _ = build_coset_graph(CosetGraphSpec(A7, sylow7(A7), parse_cycles("(4,5)(6,7)", 7)), labels=False)
    for g in [petersen(), hypercube(4), complete_bipartite(4, 5), path_graph(9),
              disjoint_union(cycle_graph(5), cycle_graph(5)), coset]:
        key = canonical_form(g).key
        for _ in range(50):
            assert canonical_form(shuffled(g, r)).key == key


def test_cube_two_ways():
    assert canonical_form(hypercube(3)).key == canonical_form(prism()).key
    assert not are_isomorphic(hypercube(3), disjoint_union(complete_graph(4), complete_graph(4)))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9), graphs(max_n=9), st.randoms(use_true_random=False))
def test_isomorphism_agrees_with_networkx(a, b, r):
    assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
    assert are_isomorphic(a, shuffled(a, r))


def test_s_arc_counts_k4():
    K4 = complete_graph(4)
    rep = s_arc_transitivity(K4, ActionHomomorphism(4, [g.raw for g in symmetric(4).generators]))
    assert rep.arc_counts == (4, 12, 24, 48)
    assert rep.transitive[:3] == (True, True, True)
    assert rep.max_s_transitive == 2


def test_s_arcs_cycle():
    C6 = cycle_graph(6)
    rot = [(v + 1) % 6 for v in range(6)]
    ref = [(-v) % 6 for v in range(6)]
    rep = s_arc_transitivity(C6, ActionHomomorphism(6, [rot, ref]))
    assert rep.arc_counts == (6, 12, 12, 12)
    assert rep.max_s_transitive == 3
    only_rot = s_arc_transitivity(C6, ActionHomomorphism(6, [rot]))
    assert only_rot.max_s_transitive == 0
    assert only_rot.orbit_counts == (1, 2, 2, 2)


def test_a7_witness_is_arc_transitive_but_not_2_arc():
    A7 = alternating(7)
    g, action = build_coset_graph(CosetGraphSpec(A7, sylow7(A7), parse_cycles("(4,5)(6,7)", 7)), labels=False)
    rep = s_arc_transitivity(g, action, s_max=2)
    assert rep.transitive[:2] == (True, True)
    # |A7| = 2520 cannot cover 360 * 7 * 6 two-arcs
    assert rep.transitive[2] is False


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_s_arc_count_identities(g):
    deg = g.degrees()
    counts = [len(s_arcs(g, s)) for s in range(4)]
    assert counts[0] == g.vertex_count
    assert counts[1] == 2 * g.edge_count
    assert counts[2] == sum(d * (d - 1) for d in deg)
    # each s-arc extends in deg(last) - 1 ways
    assert counts[3] == sum(deg[a[-1]] - 1 for a in s_arcs(g, 2))
    k = g.valency()
    if k:
        assert counts[3] == g.vertex_count * k * (k - 1) ** 2
    # reversing an arc is a bijection on s-arcs
    arcs = set(s_arcs(g, 2))
    assert {a[::-1] for a in arcs} == arcs


def _brute_normal(graph, action):
    n = graph.vertex_count
    R = set(action.vertex_group().raw_elements())
    for a in brute_automorphisms(graph):
        inv = [0] * n
        for v, w in enumerate(a):
            inv[w] = v
        for r in R:
            if tuple(a[r[inv[v]]] for v in range(n)) not in R:
                return False
    return True


@pytest.mark.parametrize("group,conn,expected", [
    (cyclic(6), ["(1,2,3,4,5,6)", "(1,6,5,4,3,2)"], True),
    (cyclic(4), ["(1,2,3,4)", "(1,3)(2,4)", "(1,4,3,2)"], False),
    (symmetric(3), ["(1,2)", "(1,3)", "(2,3)"], False),
    (symmetric(3), ["(1,2,3)", "(1,3,2)"], False),
])
def test_normal_cayley_against_brute_force(group, conn, expected):
    graph, action = cayley_graph(group, [parse_cycles(c, group.degree) for c in conn])
    assert is_normal_cayley(graph, action) == expected == _brute_normal(graph, action)


def test_klein_four_in_k4_is_normal():
    V4 = parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4), parse_cycles("(1,4)(2,3)", 4)
    from symcoset import PermutationGroup

    graph, action = cayley_graph(PermutationGroup(list(V4)), list(V4))
    assert graph == complete_graph(4)
    assert is_normal_cayley(graph, action)


def test_normal_cayley_needs_regular_group():
    with pytest.raises(NotRegular):
        is_normal_cayley(cycle_graph(6), ActionHomomorphism(6, [[(v + 2) % 6 for v in range(6)]]))
