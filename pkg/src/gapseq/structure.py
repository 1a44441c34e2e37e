"""Structural analysis of a validated gap sequence.

Gaps of a sequence with multiplicity d fall into arithmetic
progressions with common difference d, one per residue class
1..d-1 (if n > d is a gap, so is n - d, and every positive integer
below d is a gap).  This module computes that decomposition and
classifies a sequence against the two named families: the
hyperelliptic gap set {1, 3, ..., 2g-1} and the exceptional gap set
{1, 2, ..., g-1, g+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    MAX_GENUS,
    GapSequence,
    GenusCapExceeded,
    checked_sequence,
    complement_semigroup,
)


class Classification(Enum):
    HYPERELLIPTIC = "hyperelliptic"
    EXCEPTIONAL = "exceptional"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class APDecomposition:
    """Gap set as arithmetic progressions with common difference d.

    ``runs`` holds one (residue, length) pair per residue class j in
    1..d-1; the gaps in class j are exactly j, j+d, ..., j+length*d.
    The runs partition the gap set, so the lengths+1 sum to the genus.
    """

    multiplicity: int
    runs: tuple[tuple[int, int], ...]

    def gap_values(self) -> tuple[int, ...]:
        """Reconstruct the gap set from the runs (round-trip identity)."""
        d = self.multiplicity
        return tuple(
            sorted(j + k * d for j, length in self.runs for k in range(length + 1))
        )


def _require_validated(gaps: GapSequence, what: str) -> None:
    if not gaps.validated:
        raise ValueError(f"{what} requires a validated GapSequence")


def ap_decomposition(gaps: GapSequence) -> APDecomposition:
    """Decompose the gap set into its arithmetic progressions.

    Genus 0 decomposes trivially: multiplicity 1, no residue classes.
    """
    _require_validated(gaps, "ap_decomposition")
    d = complement_semigroup(gaps).multiplicity
    runs = []
    for j in range(1, d):
        in_class = [n for n in gaps.gaps if n % d == j]
        runs.append((j, (max(in_class) - j) // d))
    return APDecomposition(multiplicity=d, runs=tuple(runs))


def hyperelliptic_gaps(genus: int) -> tuple[int, ...]:
    return tuple(range(1, 2 * genus, 2))


def exceptional_gaps(genus: int) -> tuple[int, ...]:
    return tuple(range(1, genus)) + (genus + 1,)


def classify(gaps: GapSequence) -> Classification:
    """Tag a sequence as hyperelliptic, exceptional, or ordinary.

    At small genus the two families coincide ({1, 3} at genus 2
    matches both); hyperelliptic wins.  Genus 0 is ordinary.
    """
    _require_validated(gaps, "classify")
    if gaps.genus >= 1 and gaps.gaps == hyperelliptic_gaps(gaps.genus):
        return Classification.HYPERELLIPTIC
    if gaps.genus >= 2 and gaps.gaps == exceptional_gaps(gaps.genus):
        return Classification.EXCEPTIONAL
    return Classification.ORDINARY


def hyperelliptic_sequence(genus: int) -> GapSequence:
    """The odd numbers 1, 3, ..., 2g-1: the unique multiplicity-2 sequence."""
    if genus < 1:
        raise ValueError(f"hyperelliptic sequence requires genus >= 1, got {genus}")
    if genus > MAX_GENUS:
        raise GenusCapExceeded(genus, MAX_GENUS, "supported genus")
    return checked_sequence(hyperelliptic_gaps(genus), genus)


def exceptional_sequence(genus: int) -> GapSequence:
    """The gap set {1, ..., g-1, g+1}, with non-gaps g, g+2, ..., 2g-1.

    At genus 1 the formula degenerates to {2}, which cannot be a gap
    set (1 must be a gap), so genus >= 2 is required.
    """
    if genus < 2:
        raise ValueError(f"exceptional sequence requires genus >= 2, got {genus}")
    if genus > MAX_GENUS:
        raise GenusCapExceeded(genus, MAX_GENUS, "supported genus")
    return checked_sequence(exceptional_gaps(genus), genus)
