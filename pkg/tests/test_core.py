import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapseq.core import (
    MAX_GENUS,
    GapSequence,
    GenusCapExceeded,
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

from conftest import multiset_sum_reachable, oracle_enumerate, oracle_valid


def test_validate_listed_genus3_sequence():
    assert validate_gap_sequence({1, 2, 5}, 3).valid


def test_validate_initial_segment_genus4():
    assert validate_gap_sequence({1, 2, 3, 4}, 4).valid


def test_validate_closure_failure_with_witness():
    report = validate_gap_sequence({1, 4, 5}, 3)
    assert not report.valid
    tags = {(v.constraint, v.witness) for v in report.violations}
    assert ("closure", (2, 2)) in tags  # 2+2=4 lands in the gap set


def test_validate_genus_zero_empty():
    report = validate_gap_sequence(set(), 0)
    assert report.valid and report.violations == ()


def test_validate_genus_one():
    assert validate_gap_sequence({1}, 1).valid


def test_validate_missing_first_gap():
    report = validate_gap_sequence({2, 3, 4}, 3)
    assert not report.valid
    rendered = [v.render() for v in report.violations]
    assert "first-gap: 1 missing" in rendered


def test_validate_range_violation():
    report = validate_gap_sequence({1, 2, 9}, 3)
    assert not report.valid
    assert any(v.constraint == "range" and v.witness == (9,) for v in report.violations)


def test_validate_cardinality_violation():
    report = validate_gap_sequence({1, 2}, 3)
    assert any(v.constraint == "cardinality" for v in report.violations)


def test_validate_duplicates_flagged():
    report = validate_gap_sequence([1, 1, 3], 2)
    assert not report.valid
    assert [
        (v.constraint, v.witness) for v in report.violations
    ] == [("monotonicity", (1,))]


def test_validate_violations_sorted():
    report = validate_gap_sequence({2, 3, 4}, 3)
    assert list(report.violations) == sorted(report.violations)


def test_validate_rejects_negative_genus():
    with pytest.raises(ValueError):
        validate_gap_sequence({1}, -1)


def test_validate_rejects_oversized_genus():
    with pytest.raises(GenusCapExceeded):
        validate_gap_sequence({1}, MAX_GENUS + 1)


def test_checked_sequence_roundtrip():
    seq = checked_sequence({5, 2, 1}, 3)
    assert seq.gaps == (1, 2, 5) and seq.validated


def test_checked_sequence_raises_with_detail():
    with pytest.raises(ValueError, match="closure"):
        checked_sequence({1, 4, 5}, 3)


def test_complement_hyperelliptic_genus3():
    s = complement_semigroup(checked_sequence({1, 3, 5}, 3))
    assert list(s.members(8)) == [0, 2, 4, 6, 7, 8]
    assert s.multiplicity == 2
    assert s.frobenius == 5


def test_complement_genus_zero():
    s = complement_semigroup(checked_sequence(set(), 0))
    assert s.multiplicity == 1
    assert s.frobenius == -1
    assert all(s.is_member(n) for n in range(0, 20))


def test_complement_ordinary_genus3():
    s = complement_semigroup(checked_sequence({1, 2, 5}, 3))
    assert list(s.members(7)) == [0, 3, 4, 6, 7]
    assert s.multiplicity == 3
    assert s.frobenius == 5


def test_complement_requires_validated():
    with pytest.raises(ValueError):
        complement_semigroup(GapSequence(3, (1, 3, 5)))


def test_closure_check_examples():
    assert is_closed_under_addition(candidate_complement({1, 3, 5}, 3))
    assert not is_closed_under_addition(candidate_complement({1, 4, 5}, 3))
    assert is_closed_under_addition(candidate_complement(set(), 0))


def test_multiplicity_examples():
    assert multiplicity(complement_semigroup(checked_sequence({1, 3, 5}, 3))) == 2
    assert multiplicity(complement_semigroup(checked_sequence({1, 2, 5}, 3))) == 3
    # non-gaps of {1,...,g-1, g+1} start at g
    g = 5
    seq = checked_sequence(set(range(1, g)) | {g + 1}, g)
    assert multiplicity(complement_semigroup(seq)) == g


def test_frobenius_examples():
    assert frobenius_number(complement_semigroup(checked_sequence({1, 3, 5}, 3))) == 5
    assert frobenius_number(complement_semigroup(checked_sequence({1, 2, 3}, 3))) == 3
    assert frobenius_number(complement_semigroup(checked_sequence(set(), 0))) == -1


def test_minimal_generators_examples():
    assert minimal_generators(
        complement_semigroup(checked_sequence({1, 3, 5}, 3))
    ) == {2, 7}
    assert minimal_generators(
        complement_semigroup(checked_sequence({1, 2, 5}, 3))
    ) == {3, 4}
    assert minimal_generators(complement_semigroup(checked_sequence(set(), 0))) == {1}


@pytest.mark.parametrize("genus", range(0, 8))
def test_generators_generate_all_members(genus):
    # sums of generators reproduce every member up to 2g + multiplicity
    for gaps in oracle_enumerate(genus):
        s = complement_semigroup(checked_sequence(gaps, genus))
        gens = sorted(minimal_generators(s))
        bound = 2 * genus + s.multiplicity
        reach = multiset_sum_reachable(gens, bound)
        for n in range(0, bound + 1):
            assert reach[n] == s.is_member(n), (gaps, n)


@pytest.mark.parametrize("genus", range(0, 9))
def test_complement_roundtrip_exhaustive(genus):
    for gaps in oracle_enumerate(genus):
        seq = checked_sequence(gaps, genus)
        assert semigroup_gaps(complement_semigroup(seq)) == seq


@pytest.mark.parametrize("genus", range(1, 9))
def test_multiplicity_bound_and_gap_shift(genus):
    for gaps in oracle_enumerate(genus):
        s = complement_semigroup(checked_sequence(gaps, genus))
        d = s.multiplicity
        assert 2 <= d <= genus + 1
        for n in gaps:
            if n > d:
                assert n - d in set(gaps)


@st.composite
def genus_and_candidate(draw):
    genus = draw(st.integers(0, 8))
    top = 2 * genus - 1
    pool = st.integers(1, max(top + 2, 2))
    candidate = draw(st.frozensets(pool, max_size=max(top + 1, 1)))
    return genus, set(candidate)


@given(genus_and_candidate())
@settings(max_examples=300, deadline=None)
def test_validity_matches_multiset_sum_oracle(case):
    genus, candidate = case
    assert validate_gap_sequence(candidate, genus).valid == oracle_valid(
        candidate, genus
    )


@given(genus_and_candidate())
@settings(max_examples=300, deadline=None)
def test_pairwise_closure_matches_multiset_closure(case):
    genus, candidate = case
    top = 2 * genus - 1
    in_range = {n for n in candidate if 1 <= n <= top}
    s = candidate_complement(in_range, genus)
    complement = [n for n in range(1, top + 1) if n not in in_range]
    reach = multiset_sum_reachable(complement, max(top, 0))
    literal = not any(reach[n] for n in in_range)
    assert is_closed_under_addition(s) == literal
