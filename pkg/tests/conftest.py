import random
import sys
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symcoset import Permutation  # noqa: E402

_CRITERIA: list = []


def record_criterion(line: str) -> None:
    _CRITERIA.append(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240917)


def random_perm(rng, n):
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return Permutation(img)


def closure(gens, n):
    """Brute-force group closure; the oracle for every chain-based answer."""
    ident = tuple(range(n))
    raw = [g.raw for g in gens]
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in raw:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def all_perms(n):
    return [Permutation._from_raw(p) for p in permutations(range(n))]
