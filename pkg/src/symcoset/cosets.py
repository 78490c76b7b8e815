"""Coset graphs, Cayley graphs and the search for feasible connectors.

``Cos(G, H, g)`` has the right cosets of H as vertices, with ``Hx ~ Hy``
exactly when ``y x^-1`` lies in ``HgH``.  Cosets are identified by their
lexicographically least element.  The neighbours of ``Hx`` are ``H r x`` for
``r`` running over representatives of the cosets inside ``HgH``; those form a
single orbit of H acting on the right, so only ``k`` representatives are ever
materialized.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import chain as _c
from .errors import (
    CapExceeded,
    ConnectionSetNotSymmetric,
    ConnectorNotInGroup,
    IdentityInConnectionSet,
    IndexExceedsCap,
    SubgroupNotContained,
)
from .graphs import Graph
from .groups import (
    DEFAULT_ENUM_CAP,
    DEFAULT_SUBGROUP_CAP,
    PermutationGroup,
    fingerprint,
    generated_order,
    normalizer_small,
    subgroups_small,
    sylow7,
)
from .perm import Permutation, format_cycles

DEFAULT_VERTEX_CAP = 100_000
DEFAULT_CANON_CAP = 2000


# -- coset identity --------------------------------------------------------------


class CosetIndexer:
    """Maps any element ``x`` to the least element of ``Hx``.

    Enumerates H when it is small enough; otherwise walks a stabilizer chain
    of H with base ``1, 2, ..., n`` and greedily minimizes one image at a time.
    """

    def __init__(self, H: PermutationGroup, enum_cap: int = DEFAULT_ENUM_CAP):
        self.degree = H.degree
        self.subgroup = H
        if H.order() <= enum_cap:
            self._elems = H.raw_elements(enum_cap)
            self._levels = None
        else:
            self._elems = None
            gens = [g.raw for g in H.generators]
            self._levels = _c.RawChain(H.degree, gens, base=list(range(H.degree))).levels

    def canon(self, x: tuple) -> tuple:
        if self._elems is not None:
            return min(tuple(map(x.__getitem__, h)) for h in self._elems)
        for lv in self._levels:
            if len(lv.order) == 1:
                continue
            best = min(lv.order, key=x.__getitem__)
            if best != lv.point:
                x = _c.mul(lv.transversal[best], x)
        return x

    def canon_perm(self, x: Permutation) -> Permutation:
        return Permutation._from_raw(self.canon(x.raw))

    def double_coset_reps(self, g: tuple) -> list:
        """Least elements of the right cosets contained in ``HgH``, in discovery order."""
        gens = [s.raw for s in self.subgroup.generators]
        start = self.canon(g)
        seen = {start: None}
        queue = [start]
        for r in queue:
            for s in gens:
                y = self.canon(_c.mul(r, s))
                if y not in seen:
                    seen[y] = None
                    queue.append(y)
        return queue


# -- actions -----------------------------------------------------------------------


class ActionHomomorphism:
    """An action of a permutation group on the vertices ``0..n-1`` of a graph.

    ``generator_images[i][v]`` is the image of vertex ``v`` under generator
    ``i``.  Arbitrary group elements are mapped through ``image``.
    """

    def __init__(self, vertex_count: int, generator_images: Sequence[Sequence[int]],
                 group: Optional[PermutationGroup] = None,
                 mapper: Optional[Callable[[Permutation], tuple]] = None):
        self.vertex_count = vertex_count
        self.generator_images = tuple(tuple(int(v) for v in img) for img in generator_images)
        for img in self.generator_images:
            if sorted(img) != list(range(vertex_count)):
                raise ValueError("every generator image must be a permutation of the vertices")
        self.group = group
        self._mapper = mapper

    @classmethod
    def from_vertex_permutations(cls, perms: Sequence[Sequence[int]], vertex_count: int) -> "ActionHomomorphism":
        return cls(vertex_count, perms)

    def image(self, g: Permutation) -> tuple:
        if self._mapper is None:
            raise ValueError("this action only knows its generators")
        return self._mapper(g)

    def vertex_group(self) -> PermutationGroup:
        """The image group, as permutations of ``1..n``."""
        n = max(self.vertex_count, 1)
        return PermutationGroup._from_raw(n, [img for img in self.generator_images if img])

    def preserves(self, graph: Graph) -> bool:
        return all(graph.preserves(img) for img in self.generator_images)

    def orbits(self) -> list:
        """Vertex orbits of the generated group, each sorted, ordered by least vertex."""
        n = self.vertex_count
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for img in self.generator_images:
            for v, w in enumerate(img):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1


# -- specs and reports -----------------------------------------------------------


@dataclass(frozen=True)
class CosetGraphSpec:
    group: PermutationGroup
    subgroup: PermutationGroup
    connector: Permutation

    def __post_init__(self):
        n = self.group.degree
        if self.subgroup.degree != n or self.connector.degree != n:
            raise SubgroupNotContained("group, subgroup and connector must share one degree")
        for h in self.subgroup.generators:
            if not self.group.contains(h):
                raise SubgroupNotContained(f"generator {h} of the subgroup is not in the group")
        if not self.group.contains(self.connector):
            raise ConnectorNotInGroup(f"connector {self.connector} is not in the group")


@dataclass(frozen=True)
class FeasibilityReport:
    is_two_element: bool
    square_in_H: bool
    generates_G: bool
    valency: Optional[int]
    subgroup_order: int
    intersection_order: int
    generated_order: int
    group_order: int

    def feasible_for(self, k: int) -> bool:
        return self.is_two_element and self.square_in_H and self.generates_G and self.valency == k

    def to_dict(self, k: Optional[int] = None) -> dict:
        out = {
            "is_two_element": self.is_two_element,
            "square_in_H": self.square_in_H,
            "generates_G": self.generates_G,
            "valency": self.valency,
            "subgroup_order": self.subgroup_order,
            "intersection_order": self.intersection_order,
            "generated_order": self.generated_order,
            "group_order": self.group_order,
        }
        if k is not None:
            out["k"] = k
            out["feasible"] = self.feasible_for(k)
        return out


def _is_two_element_raw(x: tuple) -> bool:
    seen = bytearray(len(x))
    for i in range(len(x)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = x[j]
            length += 1
        if length & (length - 1):
            return False
    return True


def verify_feasible(spec: CosetGraphSpec, k: Optional[int] = None,
                    enum_cap: int = DEFAULT_ENUM_CAP) -> FeasibilityReport:
    """Evaluate each condition separately so a failing one can be named."""
    G, H, g = spec.group, spec.subgroup, spec.connector
    graw = g.raw
    ginv = _c.inv(graw)
    two = _is_two_element_raw(graw)
    square_in = H.contains(g * g)
    h_order = H.order()
    if h_order <= enum_cap:
        hchain = H.raw_chain
        inter = sum(1 for x in H.raw_elements(enum_cap) if hchain.contains(_c.mul(_c.mul(graw, x), ginv)))
    else:
        inter = h_order // len(CosetIndexer(H, enum_cap).double_coset_reps(graw))
    gen_order = generated_order(G.degree, list(H.generators) + [g])
    g_order = G.order()
    return FeasibilityReport(
        is_two_element=two,
        square_in_H=square_in,
        generates_G=gen_order == g_order,
        valency=h_order // inter,
        subgroup_order=h_order,
        intersection_order=inter,
        generated_order=gen_order,
        group_order=g_order,
    )


# -- coset action and graphs ---------------------------------------------------------


class CosetSpace:
    """The right cosets of H in G, numbered in breadth-first order from H itself."""

    def __init__(self, G: PermutationGroup, H: PermutationGroup,
                 vertex_cap: int = DEFAULT_VERTEX_CAP, enum_cap: int = DEFAULT_ENUM_CAP):
        if H.degree != G.degree:
            raise SubgroupNotContained("subgroup degree differs from group degree")
        index, rem = divmod(G.order(), H.order())
        if rem:
            raise SubgroupNotContained(f"|H| = {H.order()} does not divide |G| = {G.order()}")
        if index > vertex_cap:
            raise IndexExceedsCap(f"index {index} exceeds vertex cap {vertex_cap}", index, vertex_cap)
        self.group, self.subgroup, self.index = G, H, index
        self.indexer = CosetIndexer(H, enum_cap)
        canon = self.indexer.canon
        gens = [s.raw for s in G.generators]
        start = canon(tuple(range(G.degree)))
        self.position = {start: 0}
        self.reps = [start]
        images = [[0] * index for _ in gens]
        for v in range(index):  # reps grows while we walk it
            r = self.reps[v]
            for i, s in enumerate(gens):
                y = canon(_c.mul(r, s))
                w = self.position.get(y)
                if w is None:
                    w = len(self.reps)
                    self.position[y] = w
                    self.reps.append(y)
                images[i][v] = w
        if len(self.reps) != index:
            raise SubgroupNotContained("coset enumeration did not match the order index")
        self.generator_images = images

    def vertex_of(self, x: tuple) -> int:
        return self.position[self.indexer.canon(x)]

    def act(self, g: Permutation) -> tuple:
        x = g.raw
        return tuple(self.vertex_of(_c.mul(r, x)) for r in self.reps)

    def labels(self) -> list:
        return [format_cycles(Permutation._from_raw(r)) for r in self.reps]

    def action(self) -> ActionHomomorphism:
        return ActionHomomorphism(self.index, self.generator_images, self.group, self.act)


def coset_action(G: PermutationGroup, H: PermutationGroup, vertex_cap: int = DEFAULT_VERTEX_CAP):
    """(canonical coset representatives, action of G on them by right multiplication)."""
    space = CosetSpace(G, H, vertex_cap)
    return [Permutation._from_raw(r) for r in space.reps], space.action()


def _graph_on(space: CosetSpace, neighbour_reps: list, labels: bool) -> Graph:
    vertex_of = space.vertex_of
    edges = []
    for v, x in enumerate(space.reps):
        for r in neighbour_reps:
            w = vertex_of(_c.mul(r, x))
            if v < w:
                edges.append((v, w))
    return Graph(space.index, edges, space.labels() if labels else None)


def neighbour_reps(space: CosetSpace, g: Permutation) -> list:
    """Representatives of the cosets inside ``HgH``; refuses loops and one-way edges."""
    indexer = space.indexer
    reps = indexer.double_coset_reps(g.raw)
    ident = indexer.canon(tuple(range(g.degree)))
    if ident in reps:
        raise ValueError("connector lies in the subgroup, so every vertex would carry a loop")
    back = set(indexer.double_coset_reps(_c.inv(g.raw)))
    if back != set(reps):
        raise ValueError("HgH differs from Hg^-1H, so adjacency would not be symmetric")
    return reps


def build_coset_graph(spec: CosetGraphSpec, vertex_cap: int = DEFAULT_VERTEX_CAP,
                      labels: bool = True, space: Optional[CosetSpace] = None):
    """(graph, action of the group on it) for ``Cos(G, H, g)``."""
    if space is None:
        space = CosetSpace(spec.group, spec.subgroup, vertex_cap)
    reps = neighbour_reps(space, spec.connector)
    return _graph_on(space, reps, labels), space.action()


def cayley_graph(G: PermutationGroup, connection_set: Sequence[Permutation],
                 cap: int = DEFAULT_ENUM_CAP):
    """``Cay(G, S)`` with ``h ~ s h``; the action is the right regular representation."""
    S = list(dict.fromkeys(connection_set))
    sset = set(S)
    for s in S:
        if s.degree != G.degree:
            raise ConnectorNotInGroup(f"{s} has the wrong degree")
        if s.is_identity():
            raise IdentityInConnectionSet("the identity cannot be a connection element")
        if s.inverse() not in sset:
            raise ConnectionSetNotSymmetric(f"inverse of {s} is missing from the connection set")
        if not G.contains(s):
            raise ConnectorNotInGroup(f"{s} is not in the group")
    elems = sorted(G.raw_elements(cap))
    pos = {x: i for i, x in enumerate(elems)}
    edges = [(i, pos[_c.mul(s.raw, h)]) for i, h in enumerate(elems) for s in S]
    edges = [(a, b) for a, b in edges if a < b]
    graph = Graph(len(elems), edges, [format_cycles(Permutation._from_raw(h)) for h in elems])

    def act(g: Permutation) -> tuple:
        x = g.raw
        return tuple(pos[_c.mul(h, x)] for h in elems)

    images = [act(s) for s in G.generators]
    return graph, ActionHomomorphism(len(elems), images, G, act)


def normal_quotient(graph: Graph, action: ActionHomomorphism) -> Graph:
    """Quotient by the orbits of ``action``; orbits are numbered by least vertex."""
    orbits = action.orbits()
    block = [0] * graph.vertex_count
    for b, orb in enumerate(orbits):
        for v in orb:
            block[v] = b
    edges = {(min(block[u], block[v]), max(block[u], block[v]))
             for u, v in graph.edges() if block[u] != block[v]}
    return Graph(len(orbits), sorted(edges))


# -- search -------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchCaps:
    element_scan: int = DEFAULT_ENUM_CAP
    subgroup: int = DEFAULT_SUBGROUP_CAP
    orbit: int = 10_000
    vertices: int = DEFAULT_VERTEX_CAP
    canonical: int = DEFAULT_CANON_CAP

    def to_dict(self) -> dict:
        return {
            "element_scan": self.element_scan,
            "subgroup": self.subgroup,
            "normalizer_orbit": self.orbit,
            "graph_vertices": self.vertices,
            "canonical_form_vertices": self.canonical,
        }


COMPLETENESS_NOTE = (
    "every bundled soluble stabilizer type has a normal Sylow 7-subgroup, so each "
    "candidate lies in the normalizer of one of its Sylow 7-subgroups; all Sylow "
    "7-subgroups of the group are conjugate, so one normalizer covers every candidate "
    "up to conjugacy, and conjugate candidates give isomorphic coset graphs"
)


@dataclass
class SearchReport:
    group: str
    group_order: int
    degree: int
    stabilizer_type: str
    valency: int
    caps: SearchCaps
    candidate_subgroups: list = field(default_factory=list)  # dicts
    feasible_connectors: list = field(default_factory=list)  # one list of cycle strings per candidate
    isomorphism_classes: list = field(default_factory=list)  # dicts
    deduplicated: bool = True
    empty_kind: Optional[str] = None  # no_subgroup | no_connector | cap_prevented
    cap_stage: Optional[str] = None
    sylow7_order: Optional[int] = None
    normalizer_order: Optional[int] = None
    timings_ms: Optional[dict] = None
    completeness: str = COMPLETENESS_NOTE

    @property
    def empty(self) -> bool:
        return not any(self.feasible_connectors)

    @property
    def class_count(self) -> int:
        return len(self.isomorphism_classes)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "group_order": self.group_order,
            "degree": self.degree,
            "stabilizer_type": self.stabilizer_type,
            "valency": self.valency,
            "caps": self.caps.to_dict(),
            "sylow7_order": self.sylow7_order,
            "normalizer_order": self.normalizer_order,
            "candidate_subgroups": self.candidate_subgroups,
            "feasible_connectors": self.feasible_connectors,
            "graph_isomorphism_class_count": self.class_count,
            "isomorphism_classes": self.isomorphism_classes,
            "deduplicated": self.deduplicated,
            "empty": self.empty,
            "empty_kind": self.empty_kind,
            "cap_stage": self.cap_stage,
            "completeness": self.completeness,
            "pipeline_stage_timings_ms": self.timings_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SYMCOSET_THREADS", "1")))
    except ValueError:
        return 1


def _scan_connectors(G: PermutationGroup, H: PermutationGroup, k: int, lo: int, hi: int) -> list:
    """Raw elements ``g`` with index in ``[lo, hi)`` that pass every feasibility test."""
    rc = G.raw_chain
    hset = frozenset(H.raw_elements())
    hgens = [h.raw for h in H.generators]
    h_order = len(hset)
    if h_order % k:
        return []
    want_inter = h_order // k
    g_order = G.order()
    out = []
    for i in range(lo, hi):
        x = rc.element_at(i)
        if not _is_two_element_raw(x):
            continue
        if _c.mul(x, x) not in hset:
            continue
        xinv = _c.inv(x)
        inter = sum(1 for h in hset if _c.mul(_c.mul(x, h), xinv) in hset)
        if inter != want_inter:
            continue
        if _c.RawChain(G.degree, hgens + [x]).order() != g_order:
            continue
        out.append(x)
    return out


def search_feasible(G: PermutationGroup, stabilizer_type: str, k: int = 7,
                    caps: SearchCaps = SearchCaps(), group_name: Optional[str] = None,
                    timings: bool = False, build_graphs: bool = True) -> SearchReport:
    """Find every connector giving a connected ``k``-valent coset graph with the given stabilizer type."""
    from .analysis import canonical_form
    from .groups import matches_type
    from .tables import canonical_type_name

    type_name = canonical_type_name(stabilizer_type)
    stamps = {}
    clock = time.perf_counter()

    def mark(stage):
        nonlocal clock
        now = time.perf_counter()
        stamps[stage] = round((now - clock) * 1000, 3)
        clock = now

    report = SearchReport(
        group=group_name or G.name or "G", group_order=G.order(), degree=G.degree,
        stabilizer_type=type_name, valency=k, caps=caps,
    )

    def finish(kind=None, stage=None):
        report.empty_kind = kind if report.empty else None
        report.cap_stage = stage
        report.timings_ms = stamps if timings else None
        return report

    P = sylow7(G, caps.element_scan)
    report.sylow7_order = P.order()
    mark("sylow7")
    try:
        N = normalizer_small(G, P, orbit_cap=caps.orbit, element_cap=caps.element_scan)
    except CapExceeded:
        return finish("cap_prevented", "normalizer")
    report.normalizer_order = N.order()
    mark("normalizer")
    try:
        subs = subgroups_small(N, caps.subgroup)
    except CapExceeded:
        return finish("cap_prevented", "subgroups")
    candidates = [H for H in subs if matches_type(H, type_name)]
    mark("subgroups")
    for H in candidates:
        fp = fingerprint(H)
        report.candidate_subgroups.append({
            "order": H.order(),
            "generators": [format_cycles(h) for h in H.generators],
            "fingerprint": fp.to_dict(),
        })
    if not candidates:
        mark("connectors")
        return finish("no_subgroup")
    if G.order() > caps.element_scan:
        report.feasible_connectors = [[] for _ in candidates]
        return finish("cap_prevented", "connectors")
    total = G.order()
    workers = worker_count()
    found_raw = []
    for H in candidates:
        if workers == 1:
            found = _scan_connectors(G, H, k, 0, total)
        else:
            step = -(-total // workers)
            with ThreadPoolExecutor(workers) as pool:
                parts = pool.map(lambda lo: _scan_connectors(G, H, k, lo, min(lo + step, total)),
                                 range(0, total, step))
                found = [x for part in parts for x in part]
        found.sort()
        found_raw.append(found)
        report.feasible_connectors.append([format_cycles(Permutation._from_raw(x)) for x in found])
    mark("connectors")
    if build_graphs and not report.empty:
        _group_graphs(report, G, candidates, found_raw, caps, canonical_form)
    mark("graphs")
    return finish("no_connector")


def _group_graphs(report: SearchReport, G, candidates, found_raw, caps, canonical_form) -> None:
    """Sort connectors into graph isomorphism classes (identical ``HgH`` first, then canonical forms)."""
    index = G.order() // candidates[0].order()
    classes: dict = {}
    order_key: list = []
    dedupe = index <= caps.canonical
    report.deduplicated = dedupe
    for ci, (H, found) in enumerate(zip(candidates, found_raw)):
        if not found:
            continue
        space = CosetSpace(G, H, caps.vertices)
        by_double: dict = {}
        for x in found:
            reps = tuple(sorted(space.indexer.double_coset_reps(x)))
            by_double.setdefault(reps, []).append(x)
        for reps, members in by_double.items():
            if dedupe:
                graph = _graph_on(space, list(reps), labels=False)
                key = canonical_form(graph, vertex_cap=caps.canonical).key
                extra = {"vertices": graph.vertex_count, "valency": graph.valency(),
                         "connected": _connected(graph)}
            else:
                key = (len(reps), G.order())
                extra = {"vertices": index, "valency": len(reps), "connected": True}
            if key not in classes:
                classes[key] = {**extra, "representative": {
                    "subgroup": ci, "connector": format_cycles(Permutation._from_raw(members[0]))},
                    "connector_count": 0, "double_cosets": 0}
                order_key.append(key)
            classes[key]["connector_count"] += len(members)
            classes[key]["double_cosets"] += 1
    report.isomorphism_classes = [classes[k] for k in order_key]


def _connected(graph: Graph) -> bool:
    from .analysis import connected_components

    return len(connected_components(graph)) == 1


# -- bundled examples ---------------------------------------------------------------------


@dataclass
class Stage:
    name: str
    passed: Optional[bool]  # None for a cited assertion that is not computed
    detail: dict

    def to_dict(self) -> dict:
        return {"stage": self.name, "passed": self.passed, **self.detail}


@dataclass
class ExampleVerdict:
    n: int
    stages: list

    @property
    def passed(self) -> bool:
        return all(s.passed is not False for s in self.stages)

    @property
    def failed_stage(self) -> Optional[str]:
        for s in self.stages:
            if s.passed is False:
                return s.name
        return None

    def value(self, key: str):
        for s in self.stages:
            if key in s.detail:
                return s.detail[key]
        raise KeyError(key)

    def to_dict(self) -> dict:
        return {"n": self.n, "passed": self.passed, "failed_stage": self.failed_stage,
                "stages": [s.to_dict() for s in self.stages]}


def verify_example(n: int) -> ExampleVerdict:
    """Check one bundled regular-subgroup example stage by stage."""
    from .groups import matches_type
    from .tables import canonical_type_name, example_data

    data = example_data(n)
    deg = data.degree
    H = PermutationGroup(data.generators(), degree=deg)
    g = data.connector_perm()
    stages = []

    h_order = H.order()
    type_name = canonical_type_name(data.expected_type)
    fp_ok = matches_type(H, type_name)
    stages.append(Stage("a_subgroup_type", h_order == n and fp_ok,
                        {"order_H": h_order, "expected_type": data.expected_type, "fingerprint_match": fp_ok}))

    two = _is_two_element_raw(g.raw)
    sq = H.contains(g * g)
    stages.append(Stage("b_two_element", two and sq,
                        {"connector_order": g.order(), "is_two_element": two, "square_in_H": sq}))

    ginv = _c.inv(g.raw)
    hchain = H.raw_chain
    inter = sum(1 for x in H.raw_elements() if hchain.contains(_c.mul(_c.mul(g.raw, x), ginv)))
    valency = h_order // inter
    stages.append(Stage("c_valency", valency == 7 and inter == data.expected_intersection,
                        {"intersection_order": inter, "valency": valency}))

    gens = list(H.generators) + [g]
    gen_order = generated_order(deg, gens)
    all_even = all(_even(p) for p in gens)
    target = math.factorial(deg) // 2
    stages.append(Stage("d_generates_alternating", gen_order == target and all_even,
                        {"generated_order": gen_order, "alternating_order": target, "generators_even": all_even}))

    transitive = H.is_transitive()
    regular = transitive and h_order == deg
    stages.append(Stage("e_regular", regular, {"transitive": transitive, "regular": regular}))

    # point stabilizer T of the alternating group; regular H meets T trivially,
    # so |H||T| = |S| forces S = HT and T is regular on the cosets of H
    t_order = math.factorial(deg - 1) // 2
    covers = regular and h_order * t_order == target
    stages.append(Stage("f_cayley_on_point_stabilizer", covers,
                        {"point_stabilizer_order": t_order, "product_of_orders": h_order * t_order}))

    stages.append(Stage("g_non_normal", None, {
        "cited": "the alternating group acts on the graph and properly contains the simple "
                 "point stabilizer, so the regular copy of the point stabilizer is not normal "
                 "in the automorphism group; not recomputed",
    }))
    return ExampleVerdict(n, stages)


def _even(p: Permutation) -> bool:
    return (p.degree - len(p.cycles(include_fixed=True))) % 2 == 0
