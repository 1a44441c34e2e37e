import os
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

import pytest


def multiset_sum_reachable(addends: list[int], bound: int) -> list[bool]:
    """reach[s] = s is a sum of a finite multiset of addends (coin DP)."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for q in sorted(addends):
        for s in range(q, bound + 1):
            if reach[s - q]:
                reach[s] = True
    return reach


def oracle_valid(candidate: set[int], genus: int) -> bool:
    """Literal validity: right size, right range, and no gap is any
    multiset sum of complement elements.  Independent of the package's
    pairwise-closure route."""
    if len(candidate) != genus:
        return False
    top = 2 * genus - 1
    if any(n < 1 or n > top for n in candidate):
        return False
    if genus == 0:
        return True
    complement = [n for n in range(1, top + 1) if n not in candidate]
    reach = multiset_sum_reachable(complement, top)
    return not any(reach[n] for n in candidate)


def oracle_enumerate(genus: int) -> list[tuple[int, ...]]:
    from itertools import combinations

    if genus == 0:
        return [()]
    out = []
    for rest in combinations(range(2, 2 * genus), genus - 1):
        if oracle_valid({1, *rest}, genus):
            out.append((1,) + rest)
    return out


@pytest.fixture
def cli_env():
    env = dict(os.environ)
    env.pop("GAPSEQ_MAX_GENUS", None)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return env
