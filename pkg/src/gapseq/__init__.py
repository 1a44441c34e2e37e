"""Gap sequences of a genus: validation, enumeration, and analysis."""

from .core import (
    MAX_GENUS,
    GapSequence,
    GenusCapExceeded,
    NumericalSemigroup,
    ValidationReport,
    Violation,
    candidate_complement,
    checked_sequence,
    complement_semigroup,
    frobenius_number,
    is_closed_under_addition,
    minimal_generators,
    multiplicity,
    semigroup_gaps,
    validate_gap_sequence,
)
from .enumeration import (
    Caps,
    EnumerationResult,
    StreamAborted,
    brute_force_enumerate,
    count_gap_sequences,
    stream_sequences,
    tree_enumerate,
)
from .ledger import (
    DimensionLedger,
    canonical_degree,
    dimension_ledger,
    verify_riemann_roch,
)
from .output import OutputRecord, record_for
from .structure import (
    APDecomposition,
    Classification,
    ap_decomposition,
    classify,
    exceptional_sequence,
    hyperelliptic_sequence,
)

__all__ = [
    "MAX_GENUS",
    "APDecomposition",
    "Caps",
    "Classification",
    "DimensionLedger",
    "EnumerationResult",
    "GapSequence",
    "GenusCapExceeded",
    "NumericalSemigroup",
    "OutputRecord",
    "StreamAborted",
    "ValidationReport",
    "Violation",
    "ap_decomposition",
    "brute_force_enumerate",
    "candidate_complement",
    "canonical_degree",
    "checked_sequence",
    "classify",
    "complement_semigroup",
    "count_gap_sequences",
    "dimension_ledger",
    "exceptional_sequence",
    "frobenius_number",
    "hyperelliptic_sequence",
    "is_closed_under_addition",
    "minimal_generators",
    "multiplicity",
    "record_for",
    "semigroup_gaps",
    "stream_sequences",
    "tree_enumerate",
    "validate_gap_sequence",
    "verify_riemann_roch",
]
