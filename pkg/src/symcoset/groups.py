"""Permutation groups given by generators.

Orders, membership and element enumeration all go through a stabilizer
chain built on first use (see :mod:`symcoset.chain`).  The "small" helpers
below (intersection, normalizer, subgroup lattice, fingerprints) enumerate
elements outright and are guarded by explicit caps.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import chain as _c
from .errors import (
    DegreeMismatch,
    NoSylow7,
    OrbitExceedsCap,
    OrderExceedsCap,
    Unsupported,
)
from .perm import Permutation

DEFAULT_ENUM_CAP = 100_000
DEFAULT_SUBGROUP_CAP = 2000

__all__ = [
    "PermutationGroup",
    "StabilizerChain",
    "GroupOrder",
    "GroupFingerprint",
    "build_chain",
    "order",
    "contains",
    "orbit",
    "is_transitive",
    "is_regular",
    "is_semiregular",
    "enumerate_elements",
    "intersection_small",
    "conjugate_subgroup",
    "normalizer_small",
    "sylow7",
    "subgroups_small",
    "fingerprint",
    "matches_type",
    "generated_order",
]


@dataclass(frozen=True)
class GroupOrder:
    """Exact group order with its factorization when it fits in 64 bits."""

    value: int
    factors: Optional[tuple] = None  # ((prime, exponent), ...)

    @classmethod
    def of(cls, value: int) -> "GroupOrder":
        factors = tuple(sorted(_factorize(value).items())) if value < 2**64 else None
        return cls(value, factors)

    def divides(self, n: int) -> bool:
        return n % self.value == 0

    def __int__(self) -> int:
        return self.value


def _factorize(n: int) -> dict:
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class StabilizerChain:
    """Read-only view of a base and strong generating set (points 1-based)."""

    base: tuple
    orbit_sizes: tuple
    strong_generators: tuple

    @property
    def order(self) -> int:
        return math.prod(self.orbit_sizes)


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    element_order_histogram: tuple  # sorted ((element order, count), ...)
    is_abelian: bool
    center_order: int

    def histogram(self) -> dict:
        return dict(self.element_order_histogram)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "element_order_histogram": {str(k): v for k, v in self.element_order_histogram},
            "is_abelian": self.is_abelian,
            "center_order": self.center_order,
        }


class PermutationGroup:
    """Group generated by permutations of a common degree.

    The chain is built lazily; after that the object is effectively immutable
    and can be shared freely.
    """

    def __init__(self, generators: Sequence[Permutation] = (), degree: Optional[int] = None,
                 name: Optional[str] = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a degree-{degree} group")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._raw_chain = None

    @classmethod
    def _from_raw(cls, degree: int, raw_gens: Iterable[tuple], name=None) -> "PermutationGroup":
        return cls([Permutation._from_raw(g) for g in raw_gens], degree=degree, name=name)

    # -- chain-backed queries ---------------------------------------------

    @property
    def raw_chain(self) -> _c.RawChain:
        if self._raw_chain is None:
            self._raw_chain = _c.RawChain(self.degree, [g.raw for g in self.generators])
        return self._raw_chain

    @property
    def chain(self) -> StabilizerChain:
        rc = self.raw_chain
        return StabilizerChain(
            base=tuple(b + 1 for b in rc.base),
            orbit_sizes=tuple(rc.orbit_sizes()),
            strong_generators=tuple(Permutation._from_raw(g) for g in rc.strong_generators()),
        )

    def order(self) -> int:
        return self.raw_chain.order()

    def group_order(self) -> GroupOrder:
        return GroupOrder.of(self.order())

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"element of degree {p.degree} vs group degree {self.degree}")
        return self.raw_chain.contains(p.raw)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def all_even(self) -> bool:
        return all((g.degree - len(g.cycles(include_fixed=True))) % 2 == 0 for g in self.generators)

    # -- orbits -------------------------------------------------------------

    def orbit(self, point: int) -> list:
        """Orbit of a 1-based point, in breadth-first discovery order."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        raws = [g.raw for g in self.generators]
        start = point - 1
        seen = {start}
        queue = [start]
        for p in queue:
            for g in raws:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return [p + 1 for p in queue]

    def orbits(self) -> list:
        done = set()
        out = []
        for p in range(1, self.degree + 1):
            if p not in done:
                orb = self.orbit(p)
                done.update(orb)
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def is_semiregular(self) -> bool:
        n = self.order()
        return all(len(o) == n for o in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    # -- elements -------------------------------------------------------------

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> list:
        return enumerate_elements(self, cap)

    def raw_elements(self, cap: int = DEFAULT_ENUM_CAP) -> list:
        n = self.order()
        if n > cap:
            raise OrderExceedsCap(f"group order {n} exceeds cap {cap}", value=n, cap=cap)
        return list(self.raw_chain.elements())

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._from_raw(self.raw_chain.element_at(rng.randrange(self.order())))

    def stabilizer(self, point: int) -> "PermutationGroup":
        """Point stabilizer via a chain whose base starts at ``point``."""
        pt = point - 1
        rc = _c.RawChain(self.degree, [g.raw for g in self.generators], base=[pt])
        fixers = [g for g in rc.strong_generators() if g[pt] == pt]
        return PermutationGroup._from_raw(self.degree, fixers)

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, degree={self.degree})"


def _check_degree(a: PermutationGroup, b) -> None:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degree {a.degree} vs {b.degree}")


# ---------------------------------------------------------------------------
# module-level operations


def build_chain(G: PermutationGroup) -> StabilizerChain:
    return G.chain


def order(G: PermutationGroup) -> int:
    return G.order()


def contains(G: PermutationGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbit(G: PermutationGroup, point: int) -> set:
    return set(G.orbit(point))


def is_transitive(G: PermutationGroup) -> bool:
    return G.is_transitive()


def is_regular(G: PermutationGroup) -> bool:
    return G.is_regular()


def is_semiregular(G: PermutationGroup) -> bool:
    return G.is_semiregular()


def generated_order(degree: int, gens: Iterable[Permutation]) -> int:
    return _c.RawChain(degree, [g.raw for g in gens]).order()


def enumerate_elements(G: PermutationGroup, cap: int = DEFAULT_ENUM_CAP) -> list:
    """Every element exactly once, in chain-traversal order."""
    return [Permutation._from_raw(x) for x in G.raw_elements(cap)]


def _closure(raw_gens: list, identity: tuple) -> set:
    """Element set of the group generated by ``raw_gens`` (plain orbit of the identity)."""
    seen = {identity}
    queue = [identity]
    for x in queue:
        for g in raw_gens:
            y = _c.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _small_generating_set(members: Sequence[tuple], degree: int) -> list:
    """Greedy generating set for the subgroup whose full element list is ``members``."""
    identity = tuple(range(degree))
    gens: list = []
    span = {identity}
    for x in members:
        if x not in span:
            gens.append(x)
            span = _closure(gens, identity)
            if len(span) == len(members):
                break
    return gens


def intersection_small(H1: PermutationGroup, H2: PermutationGroup,
                       cap: int = DEFAULT_ENUM_CAP) -> PermutationGroup:
    _check_degree(H1, H2)
    rc2 = H2.raw_chain
    members = [x for x in H1.raw_elements(cap) if rc2.contains(x)]
    return PermutationGroup._from_raw(H1.degree, _small_generating_set(members, H1.degree))


def conjugate_subgroup(H: PermutationGroup, g: Permutation) -> PermutationGroup:
    """``g^-1 H g``."""
    if g.degree != H.degree:
        raise DegreeMismatch(f"degree {H.degree} vs {g.degree}")
    gi = g.inverse()
    return PermutationGroup([gi * h * g for h in H.generators], degree=H.degree)


def _conj_set(elems: frozenset, s: tuple, s_inv: tuple) -> frozenset:
    return frozenset(_c.mul(_c.mul(s_inv, x), s) for x in elems)


def normalizer_small(G: PermutationGroup, P: PermutationGroup,
                     orbit_cap: int = 10_000, element_cap: int = DEFAULT_ENUM_CAP) -> PermutationGroup:
    """N_G(P) as the stabilizer of P under conjugation, via Schreier generators."""
    _check_degree(G, P)
    start = frozenset(P.raw_elements(element_cap))
    gens = [g.raw for g in G.generators]
    gens_inv = [_c.inv(g) for g in gens]
    identity = tuple(range(G.degree))
    transversal = {start: identity}
    queue = [start]
    schreier: list = []
    for Q in queue:
        t = transversal[Q]
        for s, si in zip(gens, gens_inv):
            R = _conj_set(Q, s, si)
            ts = _c.mul(t, s)
            if R not in transversal:
                if len(transversal) >= orbit_cap:
                    raise OrbitExceedsCap(
                        f"conjugation orbit exceeds cap {orbit_cap}", value=len(transversal) + 1, cap=orbit_cap)
                transversal[R] = ts
                queue.append(R)
            else:
                schreier.append(_c.mul(ts, _c.inv(transversal[R])))
    # keep only generators that enlarge the group
    chosen: list = []
    rc = _c.RawChain(G.degree, [])
    for x in dict.fromkeys(schreier):
        if not _c.is_id(x) and not rc.contains(x):
            chosen.append(x)
            rc = _c.RawChain(G.degree, chosen)
    N = PermutationGroup._from_raw(G.degree, chosen)
    N._raw_chain = rc
    return N


def sylow7(G: PermutationGroup, cap: int = DEFAULT_ENUM_CAP, seed: int = 7) -> PermutationGroup:
    """A subgroup of order 7, when 7 divides |G| exactly once."""
    n = G.order()
    if n % 7:
        raise NoSylow7(f"7 does not divide |G| = {n}")
    if n % 49 == 0:
        raise Unsupported(f"49 divides |G| = {n}")
    rc = G.raw_chain
    if n <= cap:
        source = rc.elements()
    else:
        rng = random.Random(seed)
        source = (rc.element_at(rng.randrange(n)) for _ in iter(int, 1))
    for x in source:
        k = Permutation._from_raw(x).order()
        if k % 7 == 0:
            p = Permutation._from_raw(x) ** (k // 7)
            return PermutationGroup([p], degree=G.degree)
    raise AssertionError("no element of order divisible by 7 in a group of order divisible by 7")


def subgroups_small(N: PermutationGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> list:
    """Every subgroup of N exactly once, ordered by order then sorted element list.

    Starts from the cyclic subgroups and closes each known subgroup under one
    extra element at a time until nothing new appears.
    """
    elems = sorted(N.raw_elements(cap))
    index = {x: i for i, x in enumerate(elems)}
    m = len(elems)
    table = [[index[_c.mul(a, b)] for b in elems] for a in elems]
    ident = index[tuple(range(N.degree))]

    def close(K: frozenset, kgens: tuple, extra: int) -> frozenset:
        seen = set(K)
        queue = list(K)
        gens = kgens + (extra,)
        for x in queue:
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    known: dict = {}  # element set -> generator indices
    frontier: list = []
    for i in range(m):
        cyc = {ident}
        y = i
        while y != ident:
            cyc.add(y)
            y = table[y][i]
        c = frozenset(cyc)
        if c not in known:
            known[c] = (i,)
            frontier.append(c)
    while frontier:
        fresh = []
        for K in frontier:
            kgens = known[K]
            for x in range(m):
                if x in K:
                    continue
                L = close(K, kgens, x)
                if L not in known:
                    known[L] = kgens + (x,)
                    fresh.append(L)
        frontier = fresh
    ordered = sorted(known, key=lambda K: (len(K), sorted(K)))
    out = []
    for K in ordered:
        members = [elems[i] for i in sorted(K)]
        out.append(PermutationGroup._from_raw(N.degree, _small_generating_set(members, N.degree)))
    return out


def fingerprint(G: PermutationGroup, cap: int = DEFAULT_ENUM_CAP) -> GroupFingerprint:
    elems = G.raw_elements(cap)
    hist = Counter(Permutation._from_raw(x).order() for x in elems)
    gens = [g.raw for g in G.generators]
    center = sum(1 for x in elems if all(_c.mul(x, g) == _c.mul(g, x) for g in gens))
    return GroupFingerprint(
        order=len(elems),
        element_order_histogram=tuple(sorted(hist.items())),
        is_abelian=G.is_abelian(),
        center_order=center,
    )


def matches_type(G: PermutationGroup, type_name: str, cap: int = DEFAULT_ENUM_CAP) -> bool:
    from .tables import reference_fingerprint

    ref = reference_fingerprint(type_name)
    if G.order() != ref.order:
        return False
    return fingerprint(G, cap) == ref


