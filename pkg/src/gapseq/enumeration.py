"""Enumerate all valid gap sequences of a genus, by two independent routes.

The subset oracle filters every candidate gap set through
:func:`gapseq.core.validate_gap_sequence` and is the ground truth at
small genus.  The tree walk generates each complementary semigroup
exactly once and scales far beyond the oracle: children of a semigroup
are obtained by removing one minimal generator larger than its
Frobenius number, rooted at the genus-0 semigroup, so level g of the
tree holds exactly the genus-g semigroups (the unique parent is
recovered by adding the Frobenius number back).

Both routes emit sequences in lexicographic gap-tuple order, so their
outputs are comparable as ordered lists, and repeated runs are
byte-identical once serialized.

Subtree counts are independent, so the walk below a frontier can be
partitioned across worker processes; the merge is integer addition for
counts and an ordered merge for sequences, making results independent
of scheduling.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .core import (
    MAX_GENUS,
    GapSequence,
    GenusCapExceeded,
    validate_gap_sequence,
)

ORACLE_CAP = 20  # C(2g-2, g-1) subsets; ~1.7e10 at g=20 already
SEQUENCE_CAP = 40  # materialized sequence lists
COUNT_CAP = MAX_GENUS  # counting-only tree walks

ENV_CAP = "GAPSEQ_MAX_GENUS"

_SPLIT_DEPTH = 10  # frontier depth for worker partitioning

Method = str  # "oracle" | "tree"


@dataclass(frozen=True)
class Caps:
    """Effective genus caps; the environment can lower, never raise."""

    oracle: int = ORACLE_CAP
    sequences: int = SEQUENCE_CAP
    count: int = COUNT_CAP

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        env = os.environ if environ is None else environ
        raw = env.get(ENV_CAP)
        if raw is None:
            return cls()
        try:
            limit = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from None
        if limit < 0:
            raise ValueError(f"{ENV_CAP} must be non-negative, got {limit}")
        return cls(
            oracle=min(ORACLE_CAP, limit),
            sequences=min(SEQUENCE_CAP, limit),
            count=min(COUNT_CAP, limit),
        )


@dataclass(frozen=True)
class EnumerationResult:
    genus: int
    sequences: tuple[GapSequence, ...]
    count: int
    method: Method


class StreamAborted(RuntimeError):
    """The sink failed mid-stream; ``delivered`` counts completed items."""

    def __init__(self, delivered: int):
        self.delivered = delivered
        super().__init__(f"sink failed after {delivered} delivered sequences")


def _require_genus(genus: int, cap: int, what: str) -> None:
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if genus > cap:
        raise GenusCapExceeded(genus, cap, what)


def _oracle_candidates(genus: int) -> Iterator[tuple[int, ...]]:
    if genus == 0:
        yield ()
        return
    for rest in combinations(range(2, 2 * genus), genus - 1):
        yield (1,) + rest


def brute_force_enumerate(genus: int, caps: Caps | None = None) -> EnumerationResult:
    """Filter every candidate gap set of the genus through validation.

    Candidates are {1} plus each (g-1)-subset of [2, 2g-1], generated in
    lexicographic order, so the surviving sequences come out ordered.
    """
    caps = caps or Caps.from_env()
    _require_genus(genus, caps.oracle, "oracle enumeration")
    sequences = tuple(
        GapSequence(genus=genus, gaps=gaps, validated=True)
        for gaps in _oracle_candidates(genus)
        if validate_gap_sequence(gaps, genus).valid
    )
    return EnumerationResult(
        genus=genus, sequences=sequences, count=len(sequences), method="oracle"
    )


# A tree node is (mask, frobenius, multiplicity, depth): mask bit n set
# iff n is a member, for 0 <= n <= 2*target + 2; every integer above the
# mask is a member of any semigroup in a depth<=target walk since gaps
# stay below 2*target.
_Node = tuple[int, int, int, int]


def _root(target: int) -> _Node:
    bound = 2 * target + 2
    return ((1 << (bound + 1)) - 1, -1, 1, 0)


def _children(mask: int, frob: int, mult: int, depth: int) -> Iterator[_Node]:
    """Children = remove one minimal generator above the Frobenius number.

    Such generators lie in (frob, mult + max(frob, 0)]: anything larger
    splits off one multiplicity.  They also never exceed 2*depth + 1,
    since the removal yields a genus-(depth+1) semigroup whose Frobenius
    number is the removed value.
    """
    hi = min(mult + max(frob, 0), 2 * depth + 1)
    for x in range(max(frob + 1, 1), hi + 1):
        half = x // 2
        decomposable = False
        for a in range(mult, half + 1):
            if mask >> a & 1 and mask >> (x - a) & 1:
                decomposable = True
                break
        if not decomposable:
            yield (
                mask & ~(1 << x),
                x,
                x + 1 if x == mult else mult,
                depth + 1,
            )


def _count_subtree(node: _Node, target: int) -> int:
    count = 0
    stack = [node]
    while stack:
        mask, frob, mult, depth = stack.pop()
        if depth == target:
            count += 1
            continue
        stack.extend(_children(mask, frob, mult, depth))
    return count


def _collect_subtree(node: _Node, target: int) -> list[tuple[int, ...]]:
    out = []
    stack = [node]
    while stack:
        mask, frob, mult, depth = stack.pop()
        if depth == target:
            out.append(
                tuple(n for n in range(1, 2 * target) if not mask >> n & 1)
            )
            continue
        stack.extend(_children(mask, frob, mult, depth))
    return out


def _frontier(target: int, split: int) -> list[_Node]:
    nodes = []
    stack = [_root(target)]
    while stack:
        node = stack.pop()
        if node[3] == split:
            nodes.append(node)
            continue
        stack.extend(_children(*node))
    return nodes


def _count_task(args: tuple[_Node, int]) -> int:
    return _count_subtree(*args)


def _collect_task(args: tuple[_Node, int]) -> list[tuple[int, ...]]:
    return _collect_subtree(*args)


def _resolve_workers(workers: int) -> int:
    if workers < 0:
        raise ValueError(f"workers must be >= 0, got {workers}")
    if workers == 0:
        return os.cpu_count() or 1
    return workers


def _tree_run(target: int, workers: int, task, merge, sequential):
    """Run a whole-tree walk, partitioned over subtrees when workers > 1."""
    workers = _resolve_workers(workers)
    if workers == 1 or target <= _SPLIT_DEPTH:
        return sequential(_root(target), target)
    frontier = _frontier(target, _SPLIT_DEPTH)
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(task, [(node, target) for node in frontier], chunksize=1)
    return merge(parts)


def _tree_count(target: int, workers: int) -> int:
    return _tree_run(target, workers, _count_task, sum, _count_subtree)


def _tree_gap_tuples(target: int, workers: int) -> list[tuple[int, ...]]:
    def merge(parts: list[list[tuple[int, ...]]]) -> list[tuple[int, ...]]:
        return sorted(t for part in parts for t in part)

    got = _tree_run(target, workers, _collect_task, merge, _collect_subtree)
    got.sort()
    return got


def tree_enumerate(
    genus: int, caps: Caps | None = None, workers: int = 1
) -> EnumerationResult:
    """Materialize all gap sequences of the genus via the semigroup tree."""
    caps = caps or Caps.from_env()
    _require_genus(genus, caps.sequences, "tree enumeration")
    sequences = tuple(
        GapSequence(genus=genus, gaps=gaps, validated=True)
        for gaps in _tree_gap_tuples(genus, workers)
    )
    return EnumerationResult(
        genus=genus, sequences=sequences, count=len(sequences), method="tree"
    )


def count_gap_sequences(
    genus: int, method: Method, caps: Caps | None = None, workers: int = 1
) -> int:
    """Count without materializing a sequence list."""
    caps = caps or Caps.from_env()
    if method == "oracle":
        _require_genus(genus, caps.oracle, "oracle enumeration")
        return sum(
            1
            for gaps in _oracle_candidates(genus)
            if validate_gap_sequence(gaps, genus).valid
        )
    if method == "tree":
        _require_genus(genus, caps.count, "tree counting")
        return _tree_count(genus, workers)
    raise ValueError(f"unknown method {method!r}, expected 'oracle' or 'tree'")


def stream_sequences(
    genus: int,
    sink: Callable[[GapSequence], None],
    caps: Caps | None = None,
    workers: int = 1,
) -> int:
    """Deliver each sequence exactly once, in lexicographic order.

    Returns the total delivered; a sink failure aborts the stream with
    :class:`StreamAborted` carrying the partial count.
    """
    result = tree_enumerate(genus, caps=caps, workers=workers)
    delivered = 0
    for seq in result.sequences:
        try:
            sink(seq)
        except Exception as exc:
            raise StreamAborted(delivered) from exc
        delivered += 1
    return delivered
