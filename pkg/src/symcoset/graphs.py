"""Immutable simple undirected graphs in compressed sparse row form.

Vertices are ``0..n-1`` in memory and ``1..n`` in every file format.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ParseError


class Graph:
    """A simple undirected graph; neighbour lists are sorted."""

    __slots__ = ("_n", "indptr", "indices", "labels", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple], labels: Optional[Sequence[str]] = None):
        n = int(vertex_count)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        self.indptr[1:] = np.cumsum([len(a) for a in self._adj])
        self.indices = np.fromiter((v for a in self._adj for v in a), dtype=np.int64, count=int(self.indptr[-1]))
        if labels is not None and len(labels) != n:
            raise ValueError("one label per vertex required")
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]], labels=None) -> "Graph":
        return cls(len(adj), ((u, v) for u, row in enumerate(adj) for v in row if u < v), labels)

    @property
    def vertex_count(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple:
        return self._adj

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    @property
    def edge_count(self) -> int:
        return int(self.indptr[-1]) // 2

    def edges(self) -> list:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, row in enumerate(self._adj) for v in row if u < v]

    def valency(self) -> Optional[int]:
        """The common degree, or None when the graph is not regular."""
        ds = set(self.degrees())
        if len(ds) == 1:
            return ds.pop()
        return 0 if not ds else None

    def is_regular(self) -> bool:
        return self.valency() is not None

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """The graph with vertex ``v`` renamed ``mapping[v]``."""
        if sorted(mapping) != list(range(self._n)):
            raise ValueError("relabeling must be a permutation of the vertices")
        labels = None
        if self.labels is not None:
            out = [None] * self._n
            for v, w in enumerate(mapping):
                out[w] = self.labels[v]
            labels = out
        return Graph(self._n, ((mapping[u], mapping[v]) for u, v in self.edges()), labels)

    def preserves(self, images: Sequence[int]) -> bool:
        """True when the vertex map ``v -> images[v]`` sends edges to edges."""
        adj = self._adj
        for u, v in self.edges():
            a, b = images[u], images[v]
            if b not in adj[a]:
                return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(vertices={self._n}, edges={self.edge_count})"

    # -- export ---------------------------------------------------------------

    def to_edge_list(self) -> str:
        lines = [f"# vertices {self._n}"]
        lines += [f"{u + 1} {v + 1}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self._n):
            if self.labels is not None:
                lines.append(f'  {v + 1} [label="{self.labels[v]}"];')
            else:
                lines.append(f"  {v + 1};")
        lines += [f"  {u + 1} -- {v + 1};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format: optional ``# vertices N`` header, then ``u v`` per line."""
    n = None
    edges = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "vertices":
                n = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected two positive integers", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertices are numbered from 1", lineno)
        top = max(top, u, v)
        edges.append((u - 1, v - 1))
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"vertex {top} exceeds declared count {n}", 0)
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


# -- small named graphs --------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.vertex_count
    return Graph(offset, edges)
