"""Deterministic Schreier-Sims over raw 0-based image tuples.

Everything here works on plain tuples for speed; :mod:`symcoset.groups`
wraps the result in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Schreier generators are sifted in batches of this size on the numpy path
CHUNK = 256
# below this degree the pure-Python sift is faster than numpy's overhead
NUMPY_MIN_DEGREE = 24


def mul(a: tuple, b: tuple) -> tuple:
    """``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def is_id(a: tuple) -> bool:
    for i, x in enumerate(a):
        if i != x:
            return False
    return True


def first_moved(a: tuple, skip=()) -> int:
    for i, x in enumerate(a):
        if i != x and i not in skip:
            return i
    return -1


@dataclass
class Level:
    """One level of a stabilizer chain.

    ``transversal[p]`` maps the base point to ``p``; ``inverses[p]`` is its
    inverse.  ``gens`` are the strong generators fixing all earlier base points.
    """

    point: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)
    inverses: dict = field(default_factory=dict)
    order: list = field(default_factory=list)  # orbit points in discovery order
    checked: set = field(default_factory=set)  # (orbit index, gen index) pairs already sifted
    _arrays: tuple = None

    def arrays(self, degree: int):
        """(row index per point or -1, stacked inverse transversal rows) for batch sifting."""
        if self._arrays is None or self._arrays[1].shape[0] != len(self.order) * degree:
            index = np.full(degree, -1, dtype=np.intp)
            for r, p in enumerate(self.order):
                index[p] = r
            flat = np.array([self.inverses[p] for p in self.order], dtype=np.intp).ravel()
            self._arrays = (index, flat)
        return self._arrays

    def extend_orbit(self, identity: tuple) -> None:
        """Grow the orbit under ``gens`` without touching existing transversal entries."""
        if not self.transversal:
            self.transversal[self.point] = identity
            self.inverses[self.point] = identity
            self.order.append(self.point)
        queue = list(self.order)
        i = 0
        while i < len(queue):
            p = queue[i]
            u = self.transversal[p]
            for s in self.gens:
                q = s[p]
                if q not in self.transversal:
                    w = mul(u, s)
                    self.transversal[q] = w
                    self.inverses[q] = inv(w)
                    self.order.append(q)
                    queue.append(q)
            i += 1


class RawChain:
    """Base and strong generating set for the group generated by ``gens``."""

    def __init__(self, degree: int, gens, base=None):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[Level] = []
        gens = [g for g in dict.fromkeys(gens) if not is_id(g)]
        if base is not None:
            # prescribed base prefix; levels with trivial orbits are kept
            self.levels = [Level(point=b) for b in base]
        if gens:
            self._build(gens)
        elif base is not None:
            for lv in self.levels:
                lv.extend_orbit(self.identity)

    # -- construction -----------------------------------------------------

    def _new_level(self, h: tuple) -> None:
        used = {lv.point for lv in self.levels}
        self.levels.append(Level(point=first_moved(h, used)))

    def _build(self, gens: list) -> None:
        # base: least moved points, until no generator fixes them all
        if not self.levels:
            self._new_level(gens[0])
        for g in gens:
            while all(g[lv.point] == lv.point for lv in self.levels):
                self._new_level(g)
        for g in gens:
            self.levels[0].gens.append(g)
        # every generator must also sit in the deeper levels it fixes
        for g in gens:
            for j in range(1, len(self.levels)):
                if all(g[self.levels[t].point] == self.levels[t].point for t in range(j)):
                    self.levels[j].gens.append(g)
        for lv in self.levels:
            lv.extend_orbit(self.identity)
        i = len(self.levels) - 1
        while i >= 0:
            j = self._check_level(i)
            if j is None:
                i -= 1
            else:
                i = j

    def _check_level(self, i: int):
        """Sift every unchecked Schreier generator of level ``i`` in a fixed order.

        Returns the level index to resume from when a new strong generator was
        added, else None.
        """
        lv = self.levels[i]
        pending = []  # (key, schreier generator)
        for k, p in enumerate(lv.order):
            u = lv.transversal[p]
            for gi, s in enumerate(lv.gens):
                key = (k, gi)
                if key in lv.checked:
                    continue
                us = mul(u, s)
                q = s[p]
                if us == lv.transversal[q]:
                    lv.checked.add(key)
                    continue
                pending.append((key, mul(us, lv.inverses[q])))
                if len(pending) >= CHUNK:
                    j = self._process(i, pending)
                    if j is not None:
                        return j
                    pending = []
        if pending:
            return self._process(i, pending)
        return None

    def _process(self, i: int, pending: list):
        """Sift a batch; mark the leading run of members checked and add the first non-member."""
        hit = self._first_failure([sg for _, sg in pending], i + 1)
        lv = self.levels[i]
        stop = len(pending) if hit is None else hit[0]
        for key, _ in pending[:stop]:
            lv.checked.add(key)
        if hit is None:
            return None
        lv.checked.add(pending[stop][0])
        _, h, depth = hit
        if depth == len(self.levels):
            self._new_level(h)
        for t in range(i + 1, depth + 1):
            self.levels[t].gens.append(h)
            self.levels[t].extend_orbit(self.identity)
        return depth

    def _first_failure(self, elems: list, start: int):
        """First (position, residue, depth) among ``elems`` that does not sift to the identity."""
        L = len(self.levels)
        if self.degree < NUMPY_MIN_DEGREE or len(elems) < 4:
            for pos, sg in enumerate(elems):
                h, depth = self.sift(sg, start)
                if depth < L or not is_id(h):
                    return pos, h, depth
            return None
        n = self.degree
        H = np.array(elems, dtype=np.intp)
        m = len(elems)
        depth = np.full(m, L, dtype=np.intp)
        bad = np.zeros(m, dtype=bool)
        alive = np.arange(m)  # original positions of the rows still in H
        for j in range(start, L):
            lv = self.levels[j]
            index, flat = lv.arrays(n)
            r = index[H[:, lv.point]]
            ok = r >= 0
            if not ok.all():
                gone = alive[~ok]
                depth[gone] = j
                bad[gone] = True
                H, r, alive = H[ok], r[ok], alive[ok]
                if alive.size == 0:
                    break
            H = flat[H + (r * n)[:, None]]
        if alive.size:
            bad[alive] |= (H != np.arange(n)).any(axis=1)
        if not bad.any():
            return None
        pos = int(np.argmax(bad))
        # recompute the single residue exactly on the tuple path
        h, d = self.sift(elems[pos], start)
        return pos, h, d

    # -- queries ----------------------------------------------------------

    def sift(self, h: tuple, start: int = 0):
        """Strip ``h`` through the chain; return (residue, level reached)."""
        levels = self.levels
        for j in range(start, len(levels)):
            lv = levels[j]
            b = h[lv.point]
            w = lv.inverses.get(b)
            if w is None:
                return h, j
            if b != lv.point:
                h = tuple(map(w.__getitem__, h))
        return h, len(levels)

    def contains(self, h: tuple) -> bool:
        r, depth = self.sift(h)
        return depth == len(self.levels) and is_id(r)

    @property
    def base(self) -> list:
        return [lv.point for lv in self.levels]

    def orbit_sizes(self) -> list:
        return [len(lv.transversal) for lv in self.levels]

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.transversal)
        return out

    def strong_generators(self) -> list:
        seen = dict()
        for lv in self.levels:
            for g in lv.gens:
                seen.setdefault(g, None)
        return list(seen)

    def elements(self):
        """All elements, each once, in chain-traversal order."""
        levels = self.levels
        if not levels:
            yield self.identity
            return

        def rec(j, acc):
            if j < 0:
                yield acc
                return
            lv = levels[j]
            for p in lv.order:
                yield from rec(j - 1, mul(acc, lv.transversal[p]))

        yield from rec(len(levels) - 1, self.identity)

    def element_at(self, index: int) -> tuple:
        """Element number ``index`` in a mixed-radix numbering of the chain."""
        acc = self.identity
        for lv in reversed(self.levels):
            size = len(lv.order)
            index, r = divmod(index, size)
            acc = mul(acc, lv.transversal[lv.order[r]])
        return acc
