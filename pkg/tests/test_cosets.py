import json
import random

import pytest

from conftest import closure, random_perm
from symcoset import (
    ConnectionSetNotSymmetric,
    ConnectorNotInGroup,
    CosetGraphSpec,
    IdentityInConnectionSet,
    IndexExceedsCap,
    Permutation,
    PermutationGroup,
    SearchCaps,
    SubgroupNotContained,
    build_coset_graph,
    cayley_graph,
    coset_action,
    normal_quotient,
    parse_cycles,
    search_feasible,
    sylow7,
    verify_feasible,
)
from symcoset import chain as _c
from symcoset.analysis import are_isomorphic, is_connected
from symcoset.cosets import ActionHomomorphism, CosetSpace
from symcoset.graphs import complete_bipartite, complete_graph, cycle_graph, hypercube
from symcoset.groups import generated_order
from symcoset.models import alternating, builtin_group, cyclic, symmetric


def P(text, n):
    return parse_cycles(text, n)


def brute_coset_graph(G, H, g):
    """Edges between right cosets straight from the definition, as pairs of element sets."""
    hset = set(H.raw_elements())
    dc = {_c.mul(_c.mul(a, g.raw), b) for a in hset for b in hset}
    cosets = {frozenset(_c.mul(h, x) for h in hset) for x in G.raw_elements()}
    reps = {C: next(iter(C)) for C in cosets}
    edges = set()
    for A in cosets:
        for B in cosets:
            if A != B and _c.mul(reps[B], _c.inv(reps[A])) in dc:
                edges.add(frozenset((A, B)))
    return cosets, edges


def our_edges(G, H, g):
    space = CosetSpace(G, H)
    graph, _ = build_coset_graph(CosetGraphSpec(G, H, g), space=space)
    hset = list(H.raw_elements())
    vert = [frozenset(_c.mul(h, r) for h in hset) for r in space.reps]
    return set(vert), {frozenset((vert[u], vert[v])) for u, v in graph.edges()}, graph


def _symmetric_connector(H, g):
    hset = set(H.raw_elements())
    dc = {_c.mul(_c.mul(a, g.raw), b) for a in hset for b in hset}
    return _c.inv(g.raw) in dc and g.raw not in hset


def _random_instances(count, seed):
    rng = random.Random(seed)
    bases = [symmetric(4), symmetric(5), alternating(5), alternating(6), symmetric(6),
             builtin_group("F42"), PermutationGroup([P("(1,2,3,4,5,6,7,8)", 8), P("(1,8)(2,7)(3,6)(4,5)", 8)])]
    out = []
    while len(out) < count:
        G = rng.choice(bases)
        elems = G.raw_elements()
        H = PermutationGroup._from_raw(G.degree, [rng.choice(elems) for _ in range(rng.randint(1, 2))])
        if G.order() // H.order() > 500:
            continue
        g = Permutation._from_raw(rng.choice(elems))
        out.append((G, H, g))
    return out


def test_coset_action_sizes():
    G = symmetric(4)
    reps, action = coset_action(G, G.stabilizer(1))
    assert len(reps) == 4 and action.is_transitive()
    A7 = alternating(7)
    reps, action = coset_action(A7, sylow7(A7))
    assert len(reps) == 360
    assert action.vertex_group().order() == 2520


def test_coset_action_is_a_homomorphism(rng):
    G = symmetric(5)
    space = CosetSpace(G, PermutationGroup([P("(1,2,3)", 5)]))
    for _ in range(20):
        a, b = random_perm(rng, 5), random_perm(rng, 5)
        ia, ib, iab = space.act(a), space.act(b), space.act(a * b)
        assert iab == tuple(ib[ia[v]] for v in range(space.index))


def test_s4_point_stabilizer_gives_k4():
    G = symmetric(4)
    graph, action = build_coset_graph(CosetGraphSpec(G, G.stabilizer(1), P("(1,2)", 4)))
    assert graph == complete_graph(4)
    assert action.preserves(graph)
    assert graph.labels[0] == "()"


def test_s4_cyclic_subgroup():
    G = symmetric(4)
    H = PermutationGroup([P("(1,2,3,4)", 4)])
    graph, action = build_coset_graph(CosetGraphSpec(G, H, P("(1,2)", 4)))
    assert graph.vertex_count == 6
    # H meets its conjugate by (1,2) trivially
    assert graph.valency() == 4
    assert action.preserves(graph)


def test_spec_validation():
    G = alternating(4)
    with pytest.raises(ConnectorNotInGroup):
        CosetGraphSpec(G, G.stabilizer(1), P("(1,2)", 4))
    with pytest.raises(SubgroupNotContained):
        CosetGraphSpec(G, PermutationGroup([P("(1,2)", 4)]), P("(1,2)(3,4)", 4))
    with pytest.raises(SubgroupNotContained):
        CosetGraphSpec(G, symmetric(3), P("(1,2)(3,4)", 4))


def test_loops_and_asymmetry_are_refused():
    G = symmetric(4)
    H = G.stabilizer(1)
    with pytest.raises(ValueError, match="loop"):
        build_coset_graph(CosetGraphSpec(G, H, P("(2,3)", 4)))
    K = PermutationGroup([], degree=4)
    with pytest.raises(ValueError, match="symmetric"):
        build_coset_graph(CosetGraphSpec(G, K, P("(1,2,3)", 4)))


def test_vertex_cap():
    with pytest.raises(IndexExceedsCap):
        coset_action(alternating(7), sylow7(alternating(7)), vertex_cap=100)


def test_feasibility_report():
    G = symmetric(4)
    rep = verify_feasible(CosetGraphSpec(G, G.stabilizer(1), P("(1,2)", 4)), k=3)
    assert rep.feasible_for(3) and rep.valency == 3 and rep.intersection_order == 2
    assert rep.to_dict(3)["feasible"] is True
    bad = verify_feasible(CosetGraphSpec(G, G.stabilizer(1), P("(1,2,3)", 4)), k=3)
    assert not bad.is_two_element


@pytest.mark.parametrize("seed", range(3))
def test_coset_graph_matches_brute_force(seed):
    checked = 0
    for G, H, g in _random_instances(15, seed):
        if not _symmetric_connector(H, g):
            with pytest.raises(ValueError):
                build_coset_graph(CosetGraphSpec(G, H, g))
            continue
        cosets, edges = brute_coset_graph(G, H, g)
        ours, our_e, _ = our_edges(G, H, g)
        assert ours == cosets and our_e == edges
        checked += 1
    assert checked > 0


def test_a7_z7_matches_brute_force():
    A7 = alternating(7)
    H = sylow7(A7)
    g = P("(4,5)(6,7)", 7)
    cosets, edges = brute_coset_graph(A7, H, g)
    ours, our_e, graph = our_edges(A7, H, g)
    assert len(cosets) == 360 and ours == cosets and our_e == edges
    assert graph.valency() == 7


def test_connectivity_iff_generation():
    rng = random.Random(11)
    seen = set()
    count = 0
    bases = [symmetric(4), symmetric(5), alternating(5), alternating(6), builtin_group("F42")]
    while count < 50:
        G = rng.choice(bases)
        elems = G.raw_elements()
        H = PermutationGroup._from_raw(G.degree, [rng.choice(elems)])
        invol = [x for x in elems if _c.is_id(_c.mul(x, x)) and not _c.is_id(x)]
        g = Permutation._from_raw(rng.choice(invol))
        if H.contains(g):
            continue
        graph, _ = build_coset_graph(CosetGraphSpec(G, H, g), labels=False)
        generates = generated_order(G.degree, list(H.generators) + [g]) == G.order()
        assert is_connected(graph) == generates
        seen.add(generates)
        count += 1
    assert seen == {True, False}


def test_cayley_graphs():
    Z6 = cyclic(6)
    r = Z6.generators[0]
    graph, action = cayley_graph(Z6, [r, ~r])
    assert are_isomorphic(graph, cycle_graph(6))
    assert graph.labels[0] == "()"
    assert action.preserves(graph) and action.is_transitive()

    S3 = symmetric(3)
    graph, _ = cayley_graph(S3, [P("(1,2)", 3), P("(1,3)", 3), P("(2,3)", 3)])
    assert are_isomorphic(graph, complete_bipartite(3, 3))
    graph, _ = cayley_graph(S3, [x for x in S3.elements() if not x.is_identity()])
    assert graph == complete_graph(6)


def test_cayley_graph_validation():
    S3 = symmetric(3)
    with pytest.raises(IdentityInConnectionSet):
        cayley_graph(S3, [Permutation.identity(3)])
    with pytest.raises(ConnectionSetNotSymmetric):
        cayley_graph(S3, [P("(1,2,3)", 3)])
    with pytest.raises(ConnectorNotInGroup):
        cayley_graph(alternating(3), [P("(1,2)", 3)])


def test_cayley_action_is_right_multiplication(rng):
    S4 = symmetric(4)
    graph, action = cayley_graph(S4, [P("(1,2)", 4), P("(1,2,3,4)", 4), P("(1,4,3,2)", 4)])
    for _ in range(10):
        x = random_perm(rng, 4)
        assert graph.preserves(action.image(x))


def test_normal_quotients():
    cube = hypercube(3)
    antipodal = ActionHomomorphism(8, [[v ^ 7 for v in range(8)]])
    assert normal_quotient(cube, antipodal) == complete_graph(4)
    trivial = ActionHomomorphism(6, [list(range(6))])
    assert normal_quotient(cycle_graph(6), trivial) == cycle_graph(6)
    rot2 = ActionHomomorphism(6, [[(v + 2) % 6 for v in range(6)]])
    assert normal_quotient(cycle_graph(6), rot2) == complete_graph(2)


def brute_feasible(G, H, k):
    hset = set(H.raw_elements())
    g_order = G.order()
    want = len(hset) // k
    out = set()
    for x in G.raw_elements():
        p = Permutation._from_raw(x)
        o = p.order()
        if o & (o - 1) or _c.mul(x, x) not in hset:
            continue
        conj = {_c.mul(_c.mul(_c.inv(x), h), x) for h in hset}
        if len(conj & hset) != want:
            continue
        if len(closure(list(H.generators) + [p], G.degree)) == g_order:
            out.add(x)
    return out


@pytest.mark.parametrize("group,type_name,normalizer", [("A7", "Z7", 21), ("S7", "F42", 42), ("S7", "D14", 42)])
def test_search_matches_brute_force(group, type_name, normalizer):
    G = builtin_group(group)
    report = search_feasible(G, type_name, k=7)
    assert report.normalizer_order == normalizer
    # the Sylow 7-subgroups are all conjugate: their number is the normalizer index
    sylows = {frozenset(closure([p], 7)) for p in G.elements() if p.order() == 7}
    assert len(sylows) == G.order() // normalizer
    assert len(report.candidate_subgroups) >= 1
    cands = [PermutationGroup([P(s, 7) for s in c["generators"]], degree=7) for c in report.candidate_subgroups]
    for H, found in zip(cands, report.feasible_connectors):
        assert {P(s, 7).raw for s in found} == brute_feasible(G, H, 7)


def test_a7_z7_search_classes():
    report = search_feasible(alternating(7), "Z7", k=7)
    assert not report.empty and report.empty_kind is None
    assert len(report.feasible_connectors[0]) == 63
    assert report.class_count == 3
    for cls in report.isomorphism_classes:
        assert cls["vertices"] == 360 and cls["valency"] == 7 and cls["connected"]
        assert cls["connector_count"] == 21


def test_empty_search_kinds():
    assert search_feasible(alternating(7), "F42").empty_kind == "no_subgroup"
    capped = search_feasible(alternating(7), "Z7", caps=SearchCaps(element_scan=100))
    assert capped.empty_kind == "cap_prevented"


def test_search_json_is_deterministic():
    a = search_feasible(alternating(7), "Z7").to_json()
    b = search_feasible(alternating(7), "Z7").to_json()
    assert a == b
    assert json.loads(a)["pipeline_stage_timings_ms"] is None


def test_threads_give_the_same_answer(monkeypatch):
    base = search_feasible(alternating(7), "Z7").to_json()
    monkeypatch.setenv("SYMCOSET_THREADS", "4")
    assert search_feasible(alternating(7), "Z7").to_json() == base
