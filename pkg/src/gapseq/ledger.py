"""The dimension staircase of a gap sequence.

For a gap set of genus g and n = 0..2g, ``ell(n)`` is one plus the
number of non-gaps in [1, n] and ``i(n)`` is the number of gaps
strictly above n.  The two sequences are computed independently from
the gap set, so the duality identity ell(n) = n + 1 - g + i(n) is a
genuine cross-check, not a definition: ell climbs by one exactly at
non-gaps, i drops by one exactly at gaps, and the g plateaus of ell on
[1, 2g-1] recover the gap set.

Only dimensions are modeled; no function spaces or divisors appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GapSequence, ValidationReport, Violation


def canonical_degree(genus: int) -> int:
    """Degree of the canonical divisor, 2g - 2."""
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    return 2 * genus - 2


@dataclass(frozen=True)
class DimensionLedger:
    """ell and i over n = 0..2g, plus genus and canonical degree.

    The index runs one step past the last possible gap (2g - 1) to
    exhibit a final forced increment of ell.
    """

    genus: int
    ell: tuple[int, ...]
    i: tuple[int, ...]
    canonical_degree: int

    def plateaus(self) -> frozenset[int]:
        """The n in [1, 2g-1] where ell does not grow: the gap set."""
        top = 2 * self.genus - 1
        return frozenset(
            n
            for n in range(1, min(top, len(self.ell) - 1) + 1)
            if self.ell[n] == self.ell[n - 1]
        )


def dimension_ledger(gaps: GapSequence) -> DimensionLedger:
    """Build the staircase of a validated sequence from the gap set alone."""
    if not gaps.validated:
        raise ValueError("dimension_ledger requires a validated GapSequence")
    g = gaps.genus
    ell = []
    i = []
    for n in range(0, 2 * g + 1):
        non_gaps_upto = n - sum(1 for k in gaps.gaps if k <= n)
        ell.append(1 + non_gaps_upto)
        i.append(sum(1 for k in gaps.gaps if k > n))
    return DimensionLedger(
        genus=g, ell=tuple(ell), i=tuple(i), canonical_degree=canonical_degree(g)
    )


def verify_riemann_roch(ledger: DimensionLedger) -> ValidationReport:
    """Check every staircase identity; failures name the offending n.

    Checks: shape (both sequences of length 2g+1, canonical degree
    2g-2), ell(0) = 1, i(0) = g, i(2g-1) = 0, the duality identity
    ell(n) = n + 1 - g + i(n) at every n, the step dichotomy (at each
    n exactly one of ell grows by 1 / i drops by 1), and exactly g
    plateaus of ell on [1, 2g-1].
    """
    g = ledger.genus
    violations: list[Violation] = []
    span = 2 * g + 1

    if len(ledger.ell) != span or len(ledger.i) != span:
        violations.append(
            Violation(
                "shape",
                (len(ledger.ell), len(ledger.i)),
                f"expected {span} entries in ell and i, "
                f"got {len(ledger.ell)} and {len(ledger.i)}",
            )
        )
        return ValidationReport.from_violations(violations)

    if ledger.canonical_degree != 2 * g - 2:
        violations.append(
            Violation(
                "canonical-degree",
                (ledger.canonical_degree,),
                f"canonical degree must be {2 * g - 2}, got {ledger.canonical_degree}",
            )
        )
    if ledger.ell[0] != 1:
        violations.append(
            Violation("ell-origin", (0,), f"ell(0) must be 1, got {ledger.ell[0]}")
        )
    if ledger.i[0] != g:
        violations.append(
            Violation("i-origin", (0,), f"i(0) must be {g}, got {ledger.i[0]}")
        )
    if g >= 1 and ledger.i[2 * g - 1] != 0:
        violations.append(
            Violation(
                "i-terminal",
                (2 * g - 1,),
                f"i({2 * g - 1}) must be 0, got {ledger.i[2 * g - 1]}",
            )
        )
    for n in range(0, span):
        if ledger.ell[n] != n + 1 - g + ledger.i[n]:
            violations.append(
                Violation(
                    "riemann-roch",
                    (n,),
                    f"ell({n})={ledger.ell[n]} but n+1-g+i(n)={n + 1 - g + ledger.i[n]}",
                )
            )
    for n in range(1, span):
        ell_step = ledger.ell[n] - ledger.ell[n - 1]
        i_drop = ledger.i[n - 1] - ledger.i[n]
        if ell_step not in (0, 1) or i_drop not in (0, 1) or ell_step + i_drop != 1:
            violations.append(
                Violation(
                    "staircase-step",
                    (n,),
                    f"at n={n}: ell step {ell_step}, i drop {i_drop}; "
                    "exactly one of them must be 1",
                )
            )
    plateau_count = len(ledger.plateaus())
    if plateau_count != g:
        violations.append(
            Violation(
                "plateau-count",
                (plateau_count,),
                f"ell must plateau exactly {g} times on [1, {2 * g - 1}], "
                f"got {plateau_count}",
            )
        )

    return ValidationReport.from_violations(violations)
