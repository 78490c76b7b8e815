"""Finite permutations acting on the right, with a strict cycle-notation format.

Points are 1-based in every public interface; images are stored 0-based.
The product ``p * q`` applies ``p`` first, so a point ``i`` goes to
``q(p(i))``.  Right cosets ``Hx`` and right-multiplication actions rely on
this convention throughout the package.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, ParseError

__all__ = [
    "Permutation",
    "parse_cycles",
    "format_cycles",
    "compose",
    "inverse",
    "power",
    "order",
    "is_two_element",
    "parity",
]


class Permutation:
    """An immutable bijection of ``{1..degree}``."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        """Build from a 1-based image table: ``images[i-1]`` is the image of ``i``."""
        img = tuple(int(x) - 1 for x in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError("image table is not a bijection of 1..n")
        if not img:
            raise ValueError("degree must be positive")
        self._img = img
        self._hash = None

    @classmethod
    def _from_raw(cls, img: tuple) -> "Permutation":
        # trusted 0-based tuple, no validation
        p = object.__new__(cls)
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._from_raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Product of the given cycles (1-based points), applied left to right."""
        p = cls.identity(degree)
        for cyc in cycles:
            p = p * _cycle_perm(list(cyc), degree)
        return p

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image table."""
        return tuple(x + 1 for x in self._img)

    @property
    def raw(self) -> tuple:
        """0-based image table (internal storage)."""
        return self._img

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._img):
            raise ValueError(f"point {point} out of range 1..{len(self._img)}")
        return self._img[point - 1] + 1

    def _check(self, other: "Permutation") -> None:
        if len(self._img) != len(other._img):
            raise DegreeMismatch(
                f"degree {len(self._img)} vs {len(other._img)}; pad explicitly"
            )

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check(other)
        return Permutation._from_raw(tuple(map(other._img.__getitem__, self._img)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._from_raw(tuple(inv))

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def pad(self, degree: int) -> "Permutation":
        """Extend to a larger degree by fixing the new points."""
        n = len(self._img)
        if degree < n:
            raise DegreeMismatch(f"cannot shrink degree {n} to {degree}")
        return Permutation._from_raw(self._img + tuple(range(n, degree)))

    def shift(self, offset: int, degree: int) -> "Permutation":
        """Relabel point ``i`` as ``i + offset`` inside a permutation of ``degree`` points."""
        n = len(self._img)
        if offset < 0 or offset + n > degree:
            raise DegreeMismatch(f"cannot shift degree {n} by {offset} into {degree}")
        img = list(range(degree))
        for i, x in enumerate(self._img):
            img[i + offset] = x + offset
        return Permutation._from_raw(tuple(img))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles as 1-based tuples, each starting at its least point."""
        seen = bytearray(len(self._img))
        out = []
        for i in range(len(self._img)):
            if seen[i]:
                continue
            cyc = [i + 1]
            seen[i] = 1
            j = self._img[i]
            while j != i:
                seen[j] = 1
                cyc.append(j + 1)
                j = self._img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def support(self) -> list:
        return [i + 1 for i, x in enumerate(self._img) if i != x]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


def _cycle_perm(cyc: list, degree: int) -> Permutation:
    img = list(range(degree))
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        img[a - 1] = b - 1
    return Permutation._from_raw(tuple(img))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(\d+)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1, 2, 4)(3, 6, 10)"``.

    ``""`` and ``"()"`` give the identity.  A point may appear at most once in
    the whole expression, so the result is always a product of disjoint cycles.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    s = text.strip()
    if s in ("", "()"):
        return Permutation.identity(degree)
    img = list(range(degree))
    seen: dict = {}
    pos = 0
    n = len(s)
    while pos < n:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if s[pos] != "(":
            raise ParseError(f"expected '(' at position {pos}", pos)
        pos += 1
        cyc = []
        expect_int = True
        while True:
            if pos >= n:
                raise ParseError("unterminated cycle", pos)
            ch = s[pos]
            if expect_int:
                if ch.isspace() and cyc:
                    pos += 1
                    continue
                m = re.match(r"\d+", s[pos:])
                if not m:
                    raise ParseError(f"expected integer at position {pos}", pos)
                val = int(m.group())
                if not 1 <= val <= degree:
                    raise ParseError(f"point {val} out of range 1..{degree} at position {pos}", pos)
                if val in seen:
                    raise ParseError(f"repeated point {val} at position {pos}", pos)
                seen[val] = pos
                cyc.append(val)
                pos += m.end()
                expect_int = False
            elif ch == ",":
                pos += 1
                expect_int = True
            elif ch == ")":
                pos += 1
                break
            else:
                raise ParseError(f"unexpected {ch!r} at position {pos}", pos)
        if len(cyc) < 2:
            raise ParseError(f"cycle of length {len(cyc)} ending at position {pos}", pos)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return Permutation._from_raw(tuple(img))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def power(p: Permutation, k: int) -> Permutation:
    return p ** k


def order(p: Permutation) -> int:
    return p.order()


def is_two_element(p: Permutation) -> bool:
    """True when the order is a power of two (the identity included)."""
    k = p.order()
    return k & (k - 1) == 0


def parity(p: Permutation) -> str:
    n_cycles = len(p.cycles(include_fixed=True))
    return "even" if (p.degree - n_cycles) % 2 == 0 else "odd"
