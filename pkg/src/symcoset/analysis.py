"""Connectivity, s-arc transitivity, automorphism groups and canonical forms.

Automorphisms and canonical labelings come from one individualization-
refinement search.  Partitions are ordered and stored as contiguous cells of
a single position array, so a cell is named by its first position and the
refinement trace is independent of how the input was labelled.  The search
keeps the first leaf and the best leaf seen; a node is abandoned when its
trace can match neither, and children in the same orbit of the automorphisms
found so far (those fixing the current prefix) are visited only once.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .cosets import ActionHomomorphism
from .errors import CapExceeded, NotRegular
from .graphs import Graph
from .groups import PermutationGroup

DEFAULT_VERTEX_CAP = 2000
DEFAULT_ARC_CAP = 10**6


# -- connectivity ------------------------------------------------------------------


def connected_components(graph: Graph) -> list:
    """Components as sorted vertex lists, ordered by least vertex."""
    n = graph.vertex_count
    seen = bytearray(n)
    out = []
    adj = graph.adjacency
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        for v in comp:
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
        out.append(sorted(comp))
    return out


def is_connected(graph: Graph) -> bool:
    return graph.vertex_count <= 1 or len(connected_components(graph)) == 1


# -- s-arcs --------------------------------------------------------------------------


@dataclass(frozen=True)
class STransitivityReport:
    max_s_transitive: int
    arc_counts: tuple  # index s -> number of s-arcs
    orbit_counts: tuple  # index s -> orbits of the group on s-arcs
    transitive: tuple  # index s -> one orbit covering a non-empty set
    group_used: str

    def to_dict(self) -> dict:
        return {
            "max_s_transitive": self.max_s_transitive,
            "arc_counts": list(self.arc_counts),
            "orbit_counts": list(self.orbit_counts),
            "transitive": list(self.transitive),
            "group_used": self.group_used,
        }


def s_arcs(graph: Graph, s: int, cap: int = DEFAULT_ARC_CAP) -> list:
    """All walks of ``s + 1`` vertices that never step straight back."""
    adj = graph.adjacency
    arcs = [(v,) for v in range(graph.vertex_count)]
    for _ in range(s):
        nxt = []
        for a in arcs:
            last = a[-1]
            prev = a[-2] if len(a) > 1 else -1
            for w in adj[last]:
                if w != prev:
                    nxt.append(a + (w,))
            if len(nxt) > cap:
                raise CapExceeded(f"more than {cap} {s}-arcs", None, cap)
        arcs = nxt
    return arcs


def _orbit_count(arcs: list, gens: tuple) -> int:
    index = {a: i for i, a in enumerate(arcs)}
    seen = bytearray(len(arcs))
    orbits = 0
    for i, a in enumerate(arcs):
        if seen[i]:
            continue
        orbits += 1
        seen[i] = 1
        queue = [a]
        for b in queue:
            for g in gens:
                c = tuple(g[v] for v in b)
                j = index[c]
                if not seen[j]:
                    seen[j] = 1
                    queue.append(c)
    return orbits


def s_arc_transitivity(graph: Graph, action: ActionHomomorphism, s_max: int = 3,
                       vertex_cap: int = 5000, arc_cap: int = DEFAULT_ARC_CAP) -> STransitivityReport:
    """Orbit structure of the acting group on s-arcs for ``s = 0..s_max``.

    ``max_s_transitive`` is the largest s such that the group is transitive on
    s'-arcs for every ``s' <= s`` (0 when not even vertex-transitive).
    """
    if graph.vertex_count > vertex_cap:
        raise CapExceeded(f"{graph.vertex_count} vertices exceed cap {vertex_cap}",
                          graph.vertex_count, vertex_cap)
    if not 0 <= s_max <= 3:
        raise ValueError("s_max must lie in 0..3")
    gens = action.generator_images
    counts, orbits, flags = [], [], []
    for s in range(s_max + 1):
        arcs = s_arcs(graph, s, arc_cap)
        counts.append(len(arcs))
        k = _orbit_count(arcs, gens) if arcs else 0
        orbits.append(k)
        flags.append(k == 1)
    best = 0
    for s, f in enumerate(flags):
        if not f:
            break
        best = s
    desc = f"group on {action.vertex_count} vertices with {len(gens)} generators"
    return STransitivityReport(best, tuple(counts), tuple(orbits), tuple(flags), desc)


# -- partition refinement -----------------------------------------------------------


class _Partition:
    """Ordered partition: ``lab`` lists vertices, cells are runs ``[s, end[s])``."""

    __slots__ = ("lab", "cellof", "end")

    def __init__(self, lab, cellof, end):
        self.lab, self.cellof, self.end = lab, cellof, end

    @classmethod
    def unit(cls, n: int) -> "_Partition":
        return cls(list(range(n)), [0] * n, {0: n} if n else {})

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.cellof[:], dict(self.end))

    def discrete(self) -> bool:
        return len(self.end) == len(self.lab)

    def target_cell(self) -> int:
        """First smallest non-singleton cell."""
        best, size = -1, None
        for s in sorted(self.end):
            k = self.end[s] - s
            if k > 1 and (size is None or k < size):
                best, size = s, k
        return best

    def individualize(self, v: int) -> int:
        s = self.cellof[v]
        e = self.end[s]
        lab = self.lab
        i = lab.index(v, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        self.end[s] = s + 1
        self.end[s + 1] = e
        for x in lab[s + 1:e]:
            self.cellof[x] = s + 1
        return s


def _refine(adj, part: _Partition, queue: deque, trace: list) -> None:
    lab, cellof, end = part.lab, part.cellof, part.end
    queued = set(queue)
    while queue:
        w = queue.popleft()
        queued.discard(w)
        count: dict = {}
        for x in lab[w:end[w]]:
            for y in adj[x]:
                count[y] = count.get(y, 0) + 1
        touched: dict = {}
        for y in count:
            touched.setdefault(cellof[y], []).append(y)
        for s in sorted(touched):
            e = end[s]
            if e - s == 1:
                continue
            ys = touched[s]
            if len(ys) == e - s and len({count[y] for y in ys}) == 1:
                continue
            members = sorted(lab[s:e], key=lambda v: count.get(v, 0))
            lab[s:e] = members
            record = [w, s]
            starts = []
            i = s
            while i < e:
                k = count.get(members[i - s], 0)
                j = i
                while j < e and count.get(members[j - s], 0) == k:
                    j += 1
                starts.append(i)
                record += [k, j - i]
                end[i] = j
                for x in lab[i:j]:
                    cellof[x] = i
                i = j
            trace.append(tuple(record))
            if s in queued:
                fresh = starts[1:]
            else:
                sizes = [end[t] - t for t in starts]
                skip = starts[sizes.index(max(sizes))]
                fresh = [t for t in starts if t != skip]
            for t in fresh:
                if t not in queued:
                    queued.add(t)
                    queue.append(t)


def _compare(trace: list, ref: Optional[list]) -> int:
    """-1, 0 or 1: ``trace`` against the same-length prefix of ``ref``."""
    if ref is None:
        return -1
    L = len(trace)
    head = ref[:L]
    if trace == head:
        return 0 if len(ref) >= L else 1
    return -1 if trace < head else 1


class _Search:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.adj = graph.adjacency
        self.n = graph.vertex_count
        self.edges = graph.edges()
        self.autos: list = []
        self.first = None  # (trace, edges, lab, path)
        self.best = None

    def _leaf_edges(self, lab) -> tuple:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in self.edges))

    def _automorphism(self, lab_from, lab_to) -> tuple:
        img = [0] * self.n
        for a, b in zip(lab_from, lab_to):
            img[a] = b
        return tuple(img)

    def run(self):
        part = _Partition.unit(self.n)
        trace: list = []
        if self.n:
            _refine(self.adj, part, deque([0]), trace)
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.n + 1000))
        try:
            self._visit(part, trace, [])
        finally:
            sys.setrecursionlimit(limit)

    def _visit(self, part: _Partition, trace: list, path: list):
        """Explore one node; returns a level to jump back to, or None."""
        first_eq = self.first is None or _compare(trace, self.first[0]) == 0
        c_best = _compare(trace, self.best[0] if self.best else None)
        if not first_eq and c_best > 0:
            return None
        if part.discrete():
            return self._leaf(part, trace, path)
        s = part.target_cell()
        cell = part.lab[s:part.end[s]]
        depth = len(path)
        parent = list(range(self.n))
        used = 0

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        explored_roots = set()
        for v in cell:
            while used < len(self.autos):
                g = self.autos[used]
                used += 1
                if all(g[p] == p for p in path):
                    for a, b in enumerate(g):
                        ra, rb = find(a), find(b)
                        if ra != rb:
                            parent[max(ra, rb)] = min(ra, rb)
            if find(v) in {find(u) for u in explored_roots}:
                continue
            explored_roots.add(v)
            child = part.copy()
            t = trace + [(-1, s, len(cell))]
            child.individualize(v)
            _refine(self.adj, child, deque([s]), t)
            jump = self._visit(child, t, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, part: _Partition, trace: list, path: list):
        lab = part.lab
        edges = self._leaf_edges(lab)
        if self.first is None:
            self.first = (trace, edges, lab, path)
            self.best = self.first
            return None
        jump = None
        if trace == self.first[0] and edges == self.first[1]:
            self.autos.append(self._automorphism(lab, self.first[2]))
            jump = _common_prefix(path, self.first[3])
        key = (trace, edges)
        best_key = (self.best[0], self.best[1])
        if key == best_key:
            if jump is None:
                self.autos.append(self._automorphism(lab, self.best[2]))
                jump = _common_prefix(path, self.best[3])
        elif key < best_key:
            self.best = (trace, edges, lab, path)
        return jump


def _common_prefix(a: list, b: list) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def _search(graph: Graph, vertex_cap: int) -> _Search:
    if graph.vertex_count > vertex_cap:
        raise CapExceeded(f"{graph.vertex_count} vertices exceed cap {vertex_cap}",
                          graph.vertex_count, vertex_cap)
    srch = _Search(graph)
    srch.run()
    return srch


def automorphism_generators(graph: Graph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> list:
    """Automorphisms (0-based image tuples) that generate the full automorphism group."""
    return list(dict.fromkeys(_search(graph, vertex_cap).autos))


def automorphism_group(graph: Graph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> PermutationGroup:
    gens = automorphism_generators(graph, vertex_cap)
    n = max(graph.vertex_count, 1)
    return PermutationGroup._from_raw(n, gens, name="Aut")


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple  # labeling[v] = canonical label of vertex v
    edge_bytes: bytes

    @property
    def key(self) -> bytes:
        return self.edge_bytes


def canonical_form(graph: Graph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CanonicalForm:
    srch = _search(graph, vertex_cap)
    n = graph.vertex_count
    if n == 0:
        return CanonicalForm((), b"0\n")
    lab = srch.best[2]
    labeling = [0] * n
    for i, v in enumerate(lab):
        labeling[v] = i
    body = "".join(f"{u} {v}\n" for u, v in srch.best[1])
    return CanonicalForm(tuple(labeling), f"{n}\n{body}".encode())


def are_isomorphic(g1: Graph, g2: Graph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> bool:
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1, vertex_cap).key == canonical_form(g2, vertex_cap).key


# -- Cayley normality ------------------------------------------------------------------


def is_normal_cayley(graph: Graph, regular_rep: ActionHomomorphism,
                     vertex_cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Whether the regular group carried by ``regular_rep`` is normal in the automorphism group."""
    n = graph.vertex_count
    R = regular_rep.vertex_group()
    if not regular_rep.is_transitive() or R.order() != n:
        raise NotRegular("the carried group is not regular on the vertices")
    by_image = {x[0]: x for x in R.raw_elements(n)}
    for a in automorphism_generators(graph, vertex_cap):
        a_inv = [0] * n
        for v, w in enumerate(a):
            a_inv[w] = v
        for r in regular_rep.generator_images:
            # a^-1 r a, applied left to right
            c = tuple(a[r[a_inv[v]]] for v in range(n))
            if by_image[c[0]] != c:
                return False
    return True
