"""Machine-readable rendering of per-sequence analysis records.

One OutputRecord bundles everything the analysis modules derive from a
sequence.  Serialization is canonical: sorted JSON keys, fixed CSV
column order, integers only, optional ledger omitted when not
requested, so identical invocations are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import GapSequence, complement_semigroup
from .ledger import DimensionLedger, dimension_ledger
from .structure import ap_decomposition, classify

CSV_FIELDS = (
    "genus",
    "gaps",
    "non_gaps_window",
    "multiplicity",
    "frobenius",
    "classification",
    "ap_runs",
)
CSV_LEDGER_FIELDS = CSV_FIELDS + ("ell", "i")


def _join(values) -> str:
    return ";".join(str(v) for v in values)


@dataclass(frozen=True)
class OutputRecord:
    genus: int
    gaps: tuple[int, ...]
    non_gaps_window: tuple[int, ...]  # non-gaps in [1, 2g]
    multiplicity: int
    frobenius: int
    classification: str
    ap_runs: tuple[tuple[int, int], ...]
    ledger: DimensionLedger | None = None

    def to_dict(self) -> dict:
        out = {
            "genus": self.genus,
            "gaps": list(self.gaps),
            "non_gaps_window": list(self.non_gaps_window),
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "classification": self.classification,
            "ap_runs": [{"j": j, "lambda": length} for j, length in self.ap_runs],
        }
        if self.ledger is not None:
            out["ledger"] = {
                "ell": list(self.ledger.ell),
                "i": list(self.ledger.i),
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def csv_fields(self) -> tuple[str, ...]:
        return CSV_FIELDS if self.ledger is None else CSV_LEDGER_FIELDS

    def to_csv_row(self) -> list[str]:
        row = [
            str(self.genus),
            _join(self.gaps),
            _join(self.non_gaps_window),
            str(self.multiplicity),
            str(self.frobenius),
            self.classification,
            _join(f"{j}:{length}" for j, length in self.ap_runs),
        ]
        if self.ledger is not None:
            row.append(_join(self.ledger.ell))
            row.append(_join(self.ledger.i))
        return row

    def plain_line(self) -> str:
        gaps = ",".join(str(n) for n in self.gaps)
        window = ",".join(str(n) for n in self.non_gaps_window)
        return f"g={self.genus} gaps={{{gaps}}} nongaps<=2g={{{window}}}"


def record_for(seq: GapSequence, include_ledger: bool = False) -> OutputRecord:
    """Analyze one validated sequence into an OutputRecord."""
    s = complement_semigroup(seq)
    window = tuple(n for n in range(1, 2 * seq.genus + 1) if s.is_member(n))
    return OutputRecord(
        genus=seq.genus,
        gaps=seq.gaps,
        non_gaps_window=window,
        multiplicity=s.multiplicity,
        frobenius=s.frobenius,
        classification=classify(seq).value,
        ap_runs=ap_decomposition(seq).runs,
        ledger=dimension_ledger(seq) if include_ledger else None,
    )
