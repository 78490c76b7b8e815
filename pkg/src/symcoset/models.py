"""Named permutation-group models.

Direct products ``Zm x A7`` act on ``7 + m`` points: A7 on ``{1..7}`` and
the cyclic factor as one m-cycle on ``{8..7+m}``.  ``Z2^2`` and ``Z3^2`` use
two disjoint cycles.  Stabilizer types (``F21``, ``D14 x Z2``, ...) are built
on the seven points of ``Z7`` plus the same kind of cyclic tail.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional

from .errors import ParseError, UnknownTypeName
from .groups import PermutationGroup
from .perm import Permutation, format_cycles, parse_cycles


def _cycle(points, degree: int) -> Permutation:
    return Permutation.from_cycles([list(points)], degree)


def cyclic(n: int) -> PermutationGroup:
    if n == 1:
        return PermutationGroup([], degree=1, name="Z1")
    return PermutationGroup([_cycle(range(1, n + 1), n)], name=f"Z{n}")


def symmetric(n: int) -> PermutationGroup:
    if n == 1:
        return PermutationGroup([], degree=1, name="S1")
    if n == 2:
        return PermutationGroup([_cycle((1, 2), 2)], name="S2")
    return PermutationGroup([_cycle((1, 2), n), _cycle(range(1, n + 1), n)], name=f"S{n}")


def alternating(n: int) -> PermutationGroup:
    if n < 3:
        return PermutationGroup([], degree=max(n, 1), name=f"A{n}")
    if n == 3:
        return PermutationGroup([_cycle((1, 2, 3), 3)], name="A3")
    long = range(1, n + 1) if n % 2 else range(2, n + 1)
    return PermutationGroup([_cycle((1, 2, 3), n), _cycle(long, n)], name=f"A{n}")


def _with_cyclic_tail(base_gens, base_degree: int, cycles: list, name: str) -> PermutationGroup:
    """Direct product of a group on ``1..base_degree`` with cyclic factors on fresh points."""
    degree = base_degree + sum(cycles)
    gens = [g.pad(degree) for g in base_gens]
    start = base_degree + 1
    for m in cycles:
        if m > 1:
            gens.append(_cycle(range(start, start + m), degree))
        start += m
    return PermutationGroup(gens, degree=degree, name=name)


# multiplication by 2 and by 3 on Z7, written on the points 1..7 (point i <-> residue i-1)
_Z7 = _cycle(range(1, 8), 7)
_MUL2 = Permutation.from_cycles([(2, 3, 5), (4, 7, 6)], 7)
_MUL3 = Permutation.from_cycles([(2, 4, 3, 7, 5, 6)], 7)
_NEG = Permutation.from_cycles([(2, 7), (3, 6), (4, 5)], 7)

_TYPE_BASES = {
    "Z7": [_Z7],
    "D14": [_Z7, _NEG],
    "F21": [_Z7, _MUL2],
    "F42": [_Z7, _MUL3],
}


def normalize_name(name: str) -> str:
    """Canonical spelling: ``x`` for direct products, no spaces, ``Zm^k`` powers."""
    s = name.replace("×", "x").replace(" ", "").replace("_", "")
    s = s.replace("²", "^2")
    return s


def _split_factors(name: str) -> list:
    return [f for f in normalize_name(name).split("x") if f]


def stabilizer_type_model(type_name: str) -> PermutationGroup:
    """A concrete model of one of the soluble stabilizer types (any factor order)."""
    factors = _split_factors(type_name)
    base = [f for f in factors if f in _TYPE_BASES]
    tails = [f for f in factors if f not in _TYPE_BASES]
    if len(base) != 1:
        raise UnknownTypeName(type_name)
    cycles = []
    for t in tails:
        m = re.fullmatch(r"Z(\d+)", t)
        if not m:
            raise UnknownTypeName(type_name)
        cycles.append(int(m.group(1)))
    return _with_cyclic_tail(_TYPE_BASES[base[0]], 7, cycles, normalize_name(type_name))


def zm_times_a7(cycles: list, name: str) -> PermutationGroup:
    return _with_cyclic_tail(alternating(7).generators, 7, cycles, name)


def builtin_group(name: str) -> PermutationGroup:
    """Look up a named model: ``A7``, ``S4``, ``Z6``, ``Z2xA7``, ``Z3^2xA7``, ``F42xZ2``, ..."""
    s = normalize_name(name)
    m = re.fullmatch(r"([ASZ])(\d+)", s)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"A": alternating, "S": symmetric, "Z": cyclic}[kind](n)
    m = re.fullmatch(r"Z(\d+)(?:\^(\d+))?xA7", s)
    if m:
        k, e = int(m.group(1)), int(m.group(2) or 1)
        return zm_times_a7([k] * e, s)
    try:
        return stabilizer_type_model(s)
    except UnknownTypeName:
        raise UnknownTypeName(f"no built-in group named {name!r}") from None


def describe(name: str) -> str:
    G = builtin_group(name)
    return f"{normalize_name(name)} on {G.degree} points, generators " + "; ".join(str(g) for g in G.generators)


def parse_group_literal(text: str, name: Optional[str] = None) -> PermutationGroup:
    """Read the group literal format: a ``degree: n`` line, then one generator per line.

    Blank lines and ``#`` comments are ignored; ``()`` stands for the identity.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s*:\s*(\d+)", line)
            if not m:
                raise ParseError(f"line {lineno}: expected 'degree: n' header", lineno)
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", lineno) from None
    if degree is None:
        raise ParseError("missing 'degree: n' header", 0)
    return PermutationGroup(gens, degree=degree, name=name)


def format_group_literal(G: PermutationGroup) -> str:
    lines = [f"degree: {G.degree}"] + [format_cycles(g) for g in G.generators]
    return "\n".join(lines) + "\n"


def resolve_group(spec: str) -> PermutationGroup:
    """A group literal file when ``spec`` names an existing file, else a built-in model."""
    path = Path(spec)
    if path.is_file():
        return parse_group_literal(path.read_text(encoding="utf-8"), name=path.stem)
    return builtin_group(spec)
