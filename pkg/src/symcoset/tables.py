"""Bundled group-theory tables and their consistency checks.

Every file under ``data/`` is listed with its sha256 in ``data/MANIFEST``;
loading verifies the hashes and cross-checks each recorded group order
against :func:`shape_order`, so a transcription slip fails loudly at import
of the table rather than deep inside a computation.
"""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import DataIntegrityError, UnknownTypeName
from .groups import GroupFingerprint
from .perm import Permutation, parse_cycles

SOLUBLE_BOUND = 252
INSOLUBLE_BOUND = 2**24 * 3**4 * 5**2 * 7
SIMPLE_ORDER_LIMIT = 10**7

_DATA_FILES = (
    "lemma23.txt",
    "table1.txt",
    "table2.txt",
    "lemma27.txt",
    "simple_orders.txt",
    "fingerprints.txt",
    "examples.txt",
)


# -- group orders from printed shapes ---------------------------------------

_SPORADIC = {
    "M11": 7920,
    "M12": 95040,
    "J1": 175560,
    "M22": 443520,
    "J2": 604800,
    "M23": 10200960,
}


def _prod(values) -> int:
    return math.prod(values)


def order_sl(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * _prod(q**i - 1 for i in range(2, n + 1))


def order_psl(n: int, q: int) -> int:
    return order_sl(n, q) // math.gcd(n, q - 1)


def order_psu(n: int, q: int) -> int:
    full = q ** (n * (n - 1) // 2) * _prod(q**i - (-1) ** i for i in range(2, n + 1))
    return full // math.gcd(n, q + 1)


def order_psp(n: int, q: int) -> int:
    if n % 2:
        raise ValueError("symplectic groups need even dimension")
    m = n // 2
    return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)


def order_g2(q: int) -> int:
    return q**6 * (q**6 - 1) * (q**2 - 1)


def order_sz(q: int) -> int:
    return q**2 * (q**2 + 1) * (q - 1)


_FAMILIES = {
    "PSL": order_psl,
    "L": order_psl,
    "SL": order_sl,
    "PSU": order_psu,
    "U": order_psu,
    "PSp": order_psp,
    "ASL": lambda n, q: q**n * order_sl(n, q),
    "AGL": lambda n, q: q**n * order_sl(n, q) * (q - 1),
    "G2": order_g2,
    "Sz": order_sz,
}

_SHAPE_TOKEN = re.compile(
    r"""\s*(?:
        (?P<family>PSL|PSU|PSp|ASL|AGL|SL|G2|Sz|L|U)\((?P<args>\d+(?:,\d+)*)\)   # PSL(3,2), G2(3)
      | (?P<named>[ASZDF]\d+|M\d\d|J\d)                       # A7, Z2, F42, M11
      | (?P<int>\d+)
      | (?P<op>[x×:.^()\[\]])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SHAPE_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot read group shape {text!r} at position {pos}")
        pos = m.end()
        kind = next(k for k in ("family", "named", "int", "op") if m.group(k) is not None)
        out.append((kind, m.group(kind), m.group("args")))
    return out


def _atom_order(kind: str, value: str, args) -> int:
    if kind == "family":
        fam = value
        nums = [int(a) for a in args.split(",")]
        if fam not in _FAMILIES:
            raise ValueError(f"unknown family {fam}")
        return _FAMILIES[fam](*nums)
    if kind == "int":
        return int(value)
    if value in _SPORADIC:
        return _SPORADIC[value]
    letter, n = value[0], int(value[1:])
    if letter == "A":
        return math.factorial(n) // 2
    if letter == "S":
        return math.factorial(n)
    return n  # Z, D and F carry their order in the name


def shape_order(text: str) -> int:
    """Order of a group written as a shape such as ``(A6x3):2`` or ``[2^5]:PSL(5,2)``.

    Products, semidirect products (``:``) and extensions (``.``) all multiply
    orders; ``^`` raises the preceding factor to a power; ``[m]`` is any group
    of order ``m``.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, None)

    def expr() -> int:
        nonlocal pos
        value = term()
        while peek()[0] == "op" and peek()[1] in "x×:.":
            pos += 1
            value *= term()
        return value

    def term() -> int:
        nonlocal pos
        value = atom()
        while peek()[1] == "^":
            pos += 1
            kind, exp, _ = peek()
            if kind != "int":
                raise ValueError(f"exponent expected in {text!r}")
            pos += 1
            value **= int(exp)
        return value

    def atom() -> int:
        nonlocal pos
        kind, value, args = peek()
        if kind is None:
            raise ValueError(f"truncated group shape {text!r}")
        pos += 1
        if kind == "op" and value in "([":
            close = ")" if value == "(" else "]"
            inner = expr()
            if peek()[1] != close:
                raise ValueError(f"missing {close!r} in {text!r}")
            pos += 1
            return inner
        if kind == "op":
            raise ValueError(f"unexpected {value!r} in {text!r}")
        return _atom_order(kind, value, args)

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in group shape {text!r}")
    return result


# -- records -------------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerType:
    s: int
    name: str
    order: int
    soluble: bool


@dataclass(frozen=True)
class SimpleGroup:
    name: str
    order: int


@dataclass(frozen=True)
class CaseRow:
    group: str
    subgroup: str
    index: int


@dataclass(frozen=True)
class IndexVerdict:
    group: str
    subgroup: str
    printed_index: int
    group_order: int
    subgroup_order: int
    computed_index: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "S": self.group,
            "H": self.subgroup,
            "printed_index": self.printed_index,
            "order_S": self.group_order,
            "order_H": self.subgroup_order,
            "computed_index": self.computed_index,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ExampleData:
    n: int
    degree: int
    subgroup_generators: tuple  # the strings exactly as bundled
    connector: str
    expected_type: str
    expected_intersection: int

    def generators(self) -> list:
        return [parse_cycles(s, self.degree) for s in self.subgroup_generators]

    def connector_perm(self) -> Permutation:
        return parse_cycles(self.connector, self.degree)


# -- loading -------------------------------------------------------------------


def _read(name: str) -> str:
    return resources.files("symcoset").joinpath("data", name).read_text(encoding="utf-8")


def _rows(name: str) -> list:
    out = []
    for line in _read(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append([c.strip() for c in line.split("|")])
    return out


@lru_cache(maxsize=None)
def manifest() -> dict:
    entries = {}
    for line in _read("MANIFEST").splitlines():
        if line.strip():
            digest, name = line.split()
            entries[name] = digest
    return entries


def manifest_hash() -> str:
    """Hash of the manifest itself; pins the whole bundled data set."""
    return hashlib.sha256(_read("MANIFEST").encode()).hexdigest()


def verify_manifest() -> None:
    entries = manifest()
    for name in _DATA_FILES:
        digest = hashlib.sha256(_read(name).encode()).hexdigest()
        if entries.get(name) != digest:
            raise DataIntegrityError(f"checksum mismatch for data/{name}")


def _check_order(name: str, recorded: int) -> None:
    computed = shape_order(name)
    if computed != recorded:
        raise DataIntegrityError(f"{name}: recorded order {recorded}, shape gives {computed}")


@lru_cache(maxsize=None)
def stabilizer_types() -> tuple:
    verify_manifest()
    out = []
    for s, name, order, kind in _rows("lemma23.txt"):
        row = StabilizerType(int(s), name, int(order), kind == "soluble")
        _check_order(row.name, row.order)
        bound = SOLUBLE_BOUND if row.soluble else INSOLUBLE_BOUND
        if bound % row.order:
            raise DataIntegrityError(f"{row.name}: order {row.order} does not divide {bound}")
        out.append(row)
    return tuple(out)


@lru_cache(maxsize=None)
def simple_groups() -> tuple:
    verify_manifest()
    out = []
    for name, order in _rows("simple_orders.txt"):
        g = SimpleGroup(name, int(order))
        _check_order(g.name, g.order)
        out.append(g)
    keys = [(g.order, g.name) for g in out]
    if keys != sorted(set(keys)) or any(g.order <= 0 or g.order > SIMPLE_ORDER_LIMIT for g in out):
        raise DataIntegrityError("simple order table must be sorted, unique and within range")
    by_name = {g.name: g.order for g in out}
    for name, expected in (("A5", 60), ("A7", 2520), ("PSU(3,3)", 2**5 * 3**3 * 7)):
        if by_name.get(name) != expected:
            raise DataIntegrityError(f"spot check failed for {name}")
    return tuple(out)


def _case_rows(name: str) -> tuple:
    verify_manifest()
    return tuple(CaseRow(a, b, int(c)) for a, b, c in _rows(name))


def table1() -> tuple:
    return _case_rows("table1.txt")


def table2() -> tuple:
    return _case_rows("table2.txt")


@lru_cache(maxsize=None)
def lemma27_pairs() -> tuple:
    """(column, group name, stabilizer type) for every within-column combination."""
    verify_manifest()
    return tuple((int(c), g, t) for c, g, t in _rows("lemma27.txt"))


@lru_cache(maxsize=None)
def _examples() -> dict:
    verify_manifest()
    blocks: dict = {}
    current = None
    for line in _read("examples.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"\[(\d+)\]", line)
        if m:
            current = blocks.setdefault(int(m.group(1)), {"H": []})
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "H":
            current["H"].append(value)
        else:
            current[key] = value
    out = {}
    for n, b in blocks.items():
        ex = ExampleData(
            n=n,
            degree=int(b["degree"]),
            subgroup_generators=tuple(b["H"]),
            connector=b["g"],
            expected_type=b["type"],
            expected_intersection=int(b["intersection"]),
        )
        ex.generators()  # parse check
        ex.connector_perm()
        out[n] = ex
    return out


@lru_cache(maxsize=None)
def _fingerprints() -> dict:
    verify_manifest()
    out = {}
    for name, order, hist, abelian, center in _rows("fingerprints.txt"):
        pairs = tuple(
            tuple(int(v) for v in item.split(":")) for item in hist.split()
        )
        fp = GroupFingerprint(int(order), pairs, abelian == "abelian", int(center))
        if sum(c for _, c in pairs) != fp.order:
            raise DataIntegrityError(f"fingerprint histogram of {name} does not sum to its order")
        out[name] = fp
    return out


# -- queries -------------------------------------------------------------------


def lemma23_types(s: int, soluble: bool = True) -> list:
    """Names of the stabilizer types for transitivity ``s``, in table order."""
    if s not in (1, 2, 3):
        raise KeyError(f"s must be 1, 2 or 3, got {s}")
    return [r.name for r in stabilizer_types() if r.s == s and r.soluble == soluble]


def simple_orders_dividing(n: int) -> list:
    """(name, order) of every bundled simple group whose order divides ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(g.name, g.order) for g in simple_groups() if n % g.order == 0]


def check_table2_arithmetic() -> list:
    verdicts = []
    for row in table2():
        gs, hs = shape_order(row.group), shape_order(row.subgroup)
        computed = gs / hs
        verdicts.append(IndexVerdict(
            row.group, row.subgroup, row.index, gs, hs,
            int(computed) if computed == int(computed) else computed,
            gs == row.index * hs,
        ))
    return verdicts


def example_data(n: int) -> ExampleData:
    try:
        return _examples()[n]
    except KeyError:
        raise KeyError(f"no bundled example for n={n}; choose from {sorted(_examples())}") from None


_ALIASES = {"Z2xF42": "F42xZ2", "Z3xF21": "F21xZ3", "Z2xD14": "D14xZ2",
            "Z3xF42": "F42xZ3", "Z6xF42": "F42xZ6"}


def canonical_type_name(name: str) -> str:
    s = name.replace("×", "x").replace(" ", "")
    s = _ALIASES.get(s, s)
    if s not in _fingerprints():
        raise UnknownTypeName(f"unknown stabilizer type {name!r}; known: {sorted(_fingerprints())}")
    return s


def reference_fingerprint(name: str) -> GroupFingerprint:
    return _fingerprints()[canonical_type_name(name)]


def known_types() -> list:
    return sorted(_fingerprints())
