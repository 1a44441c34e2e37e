"""Gap sequences of a genus and their complementary numerical semigroups.

A gap sequence of genus g is a set of g positive integers, starting at 1
and bounded by 2g-1, whose complement in the non-negative integers is
closed under addition (a numerical semigroup).  This module holds the
value types and every single-sequence check; enumeration across a genus
lives in :mod:`gapseq.enumeration`.

All types are immutable and all functions are pure, so values can be
shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Enumeration is exponential in genus; anything larger than this is
# rejected explicitly instead of being allowed to run forever.
MAX_GENUS = 64


class GenusCapExceeded(ValueError):
    """Requested genus is beyond the hard cap of the operation."""

    def __init__(self, genus: int, cap: int, what: str):
        self.genus = genus
        self.cap = cap
        super().__init__(f"genus {genus} exceeds the {what} cap of {cap}")


@dataclass(frozen=True, order=True)
class Violation:
    """One failed validity constraint, with a witness.

    ``constraint`` is one of ``cardinality``, ``first-gap``, ``range``,
    ``monotonicity``, ``closure`` (gap validation) or one of the ledger
    tags used by :func:`gapseq.ledger.verify_riemann_roch`.  ``witness``
    holds the offending value(s), e.g. the pair whose sum lands in the
    gap set.
    """

    constraint: str
    witness: tuple[int, ...]
    message: str

    def render(self) -> str:
        return f"{self.constraint}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "ValidationReport":
        ordered = tuple(sorted(violations))
        return cls(valid=not ordered, violations=ordered)


@dataclass(frozen=True)
class GapSequence:
    """A candidate or validated gap set: genus plus the gap values.

    Construction is permissive so the CLI can explain *why* a candidate
    fails; only instances with ``validated=True`` (produced by
    :func:`checked_sequence` or by the enumerators) are accepted by the
    downstream analysis functions.
    """

    genus: int
    gaps: tuple[int, ...]
    validated: bool = False

    def gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Complement of a gap set: membership window plus key statistics.

    ``window`` is an int bitmask; bit n is set iff n is a member
    (non-gap), for 0 <= n <= 4*genus.  Every integer beyond the window
    is a member.  ``multiplicity`` is the least positive member,
    ``frobenius`` the largest non-member (-1 when there is none).
    """

    genus: int
    window: int
    multiplicity: int
    frobenius: int

    def window_bound(self) -> int:
        return 4 * self.genus

    def is_member(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.window_bound():
            return True
        return bool(self.window >> n & 1)

    def members(self, upto: int) -> Iterator[int]:
        """Members in [0, upto], ascending."""
        for n in range(0, upto + 1):
            if self.is_member(n):
                yield n

    def gap_values(self) -> tuple[int, ...]:
        """Non-members, ascending (all lie in [1, 2*genus - 1])."""
        return tuple(
            n for n in range(1, 2 * self.genus) if not self.window >> n & 1
        )


def _check_genus(genus: int) -> None:
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if genus > MAX_GENUS:
        raise GenusCapExceeded(genus, MAX_GENUS, "supported genus")


def validate_gap_sequence(candidate: Iterable[int], genus: int) -> ValidationReport:
    """Check a candidate gap set against every validity constraint.

    Constraints: exactly ``genus`` distinct values (cardinality), all in
    [1, 2*genus - 1] (range), 1 present when genus >= 1 (first-gap), no
    repeated values (monotonicity), and the complement closed under
    addition (closure).  Every failed constraint is reported with a
    witness; malformed input never raises, only genus out of [0, 64]
    does.

    The closure check is pairwise over the window, which is equivalent
    to closure under arbitrary multiset sums: a minimal counterexample
    sum of k >= 2 complement elements landing in the gap set yields,
    by dropping its last summand, a pairwise witness.
    """
    _check_genus(genus)
    values = list(candidate)
    violations: list[Violation] = []

    seen: set[int] = set()
    duplicates: set[int] = set()
    for v in values:
        if v in seen:
            duplicates.add(v)
        seen.add(v)
    for v in sorted(duplicates):
        violations.append(
            Violation("monotonicity", (v,), f"{v} occurs more than once")
        )

    distinct = sorted(seen)
    top = 2 * genus - 1
    if len(distinct) != genus:
        violations.append(
            Violation(
                "cardinality",
                (len(distinct),),
                f"expected {genus} gaps, got {len(distinct)}",
            )
        )
    if genus >= 1 and 1 not in seen:
        violations.append(Violation("first-gap", (1,), "1 missing"))
    for v in distinct:
        if v < 1 or v > top:
            violations.append(
                Violation("range", (v,), f"{v} outside [1, {max(top, 0)}]")
            )

    gaps_in_range = {v for v in distinct if 1 <= v <= top}
    non_gaps = [n for n in range(1, top + 1) if n not in gaps_in_range]
    for idx, a in enumerate(non_gaps):
        for b in non_gaps[idx:]:
            if a + b > top:
                break
            if a + b in gaps_in_range:
                violations.append(
                    Violation("closure", (a, b), f"{a}+{b}={a + b} is a gap")
                )

    return ValidationReport.from_violations(violations)


def checked_sequence(candidate: Iterable[int], genus: int) -> GapSequence:
    """Validate a candidate and return it as a validated GapSequence.

    Raises ValueError naming every violation if the candidate fails.
    """
    values = tuple(sorted(set(candidate)))
    report = validate_gap_sequence(values, genus)
    if not report.valid:
        detail = "; ".join(v.render() for v in report.violations)
        raise ValueError(f"not a valid genus-{genus} gap sequence: {detail}")
    return GapSequence(genus=genus, gaps=values, validated=True)


def candidate_complement(candidate: Iterable[int], genus: int) -> NumericalSemigroup:
    """Complement window of an arbitrary candidate, without closure checks.

    Out-of-range candidate values are ignored (they are range
    violations, not window content).  Used to probe candidates that may
    fail validation, e.g. with :func:`is_closed_under_addition`.
    """
    _check_genus(genus)
    bound = 4 * genus
    gaps = {v for v in candidate if 1 <= v <= 2 * genus - 1}
    window = 0
    for n in range(0, bound + 1):
        if n not in gaps:
            window |= 1 << n
    positive = [n for n in range(1, bound + 1) if window >> n & 1]
    mult = positive[0] if positive else 1
    frob = max(gaps) if gaps else -1
    return NumericalSemigroup(
        genus=genus, window=window, multiplicity=mult, frobenius=frob
    )


def complement_semigroup(gaps: GapSequence) -> NumericalSemigroup:
    """Numerical semigroup complementary to a validated gap sequence."""
    if not gaps.validated:
        raise ValueError("complement_semigroup requires a validated GapSequence")
    return candidate_complement(gaps.gaps, gaps.genus)


def is_closed_under_addition(s: NumericalSemigroup) -> bool:
    """Pairwise closure of the positive members on the window.

    Sums above 2*genus - 1 are members by construction, so checking
    pairs of members up to 2*genus with sum at most 2*genus - 1 settles
    closure under arbitrary multiset sums.
    """
    top = 2 * s.genus - 1
    members = [n for n in range(1, 2 * s.genus + 1) if s.is_member(n)]
    for idx, a in enumerate(members):
        for b in members[idx:]:
            if a + b > top:
                break
            if not s.is_member(a + b):
                return False
    return True


def multiplicity(s: NumericalSemigroup) -> int:
    """Least positive member; 1 for genus 0, else in [2, genus + 1]."""
    return s.multiplicity


def frobenius_number(s: NumericalSemigroup) -> int:
    """Largest non-member; -1 for genus 0, else at most 2*genus - 1."""
    return s.frobenius


def minimal_generators(s: NumericalSemigroup) -> frozenset[int]:
    """The unique minimal generating set of the semigroup.

    A member is a generator iff it is not the sum of two smaller
    positive members.  Generators never exceed frobenius +
    multiplicity: anything larger splits off one multiplicity.
    """
    if s.genus == 0:
        return frozenset({1})
    bound = min(s.frobenius + s.multiplicity, s.window_bound())
    gens = []
    for m in range(1, bound + 1):
        if not s.is_member(m):
            continue
        decomposable = any(
            s.is_member(a) and s.is_member(m - a) for a in range(1, m // 2 + 1)
        )
        if not decomposable:
            gens.append(m)
    return frozenset(gens)


def semigroup_gaps(s: NumericalSemigroup) -> GapSequence:
    """Re-derive the (validated) gap sequence from the window."""
    return checked_sequence(s.gap_values(), s.genus)
