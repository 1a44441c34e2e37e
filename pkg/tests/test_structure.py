import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapseq.core import GapSequence, checked_sequence, complement_semigroup
from gapseq.structure import (
    Classification,
    ap_decomposition,
    classify,
    exceptional_sequence,
    hyperelliptic_sequence,
)

from conftest import oracle_enumerate


def test_ap_hyperelliptic_genus3():
    dec = ap_decomposition(checked_sequence({1, 3, 5}, 3))
    assert dec.multiplicity == 2
    assert dec.runs == ((1, 2),)


def test_ap_single_gap():
    dec = ap_decomposition(checked_sequence({1}, 1))
    assert dec.multiplicity == 2
    assert dec.runs == ((1, 0),)


def test_ap_ordinary_genus3():
    dec = ap_decomposition(checked_sequence({1, 2, 5}, 3))
    assert dec.multiplicity == 3
    assert dec.runs == ((1, 0), (2, 1))
    assert dec.gap_values() == (1, 2, 5)


def test_ap_genus_zero_trivial():
    dec = ap_decomposition(checked_sequence(set(), 0))
    assert dec.multiplicity == 1
    assert dec.runs == ()
    assert dec.gap_values() == ()


def test_ap_requires_validated():
    with pytest.raises(ValueError):
        ap_decomposition(GapSequence(3, (1, 3, 5)))


@pytest.mark.parametrize("genus", range(0, 9))
def test_ap_roundtrip_exhaustive(genus):
    for gaps in oracle_enumerate(genus):
        seq = checked_sequence(gaps, genus)
        dec = ap_decomposition(seq)
        assert dec.gap_values() == seq.gaps
        assert sum(length + 1 for _, length in dec.runs) == genus
        for j, length in dec.runs:
            assert j + length * dec.multiplicity <= 2 * genus - 1


def test_classify_hyperelliptic():
    assert classify(checked_sequence({1, 3, 5, 7}, 4)) is Classification.HYPERELLIPTIC


def test_classify_exceptional_genus4():
    assert classify(checked_sequence({1, 2, 3, 5}, 4)) is Classification.EXCEPTIONAL


def test_classify_exceptional_genus3():
    # {1,2,4} is the genus-3 instance of {1,...,g-1,g+1}
    assert classify(checked_sequence({1, 2, 4}, 3)) is Classification.EXCEPTIONAL


def test_classify_ordinary_genus3():
    assert classify(checked_sequence({1, 2, 5}, 3)) is Classification.ORDINARY


def test_classify_precedence_genus2():
    # {1,3} matches both family formulas; hyperelliptic wins
    assert classify(checked_sequence({1, 3}, 2)) is Classification.HYPERELLIPTIC


def test_classify_genus1():
    assert classify(checked_sequence({1}, 1)) is Classification.HYPERELLIPTIC


def test_classify_genus0():
    assert classify(checked_sequence(set(), 0)) is Classification.ORDINARY


def test_hyperelliptic_sequence_examples():
    assert hyperelliptic_sequence(3).gaps == (1, 3, 5)
    assert hyperelliptic_sequence(1).gaps == (1,)
    assert hyperelliptic_sequence(10).gaps == tuple(range(1, 20, 2))


def test_hyperelliptic_sequence_rejects_genus0():
    with pytest.raises(ValueError):
        hyperelliptic_sequence(0)


def test_exceptional_sequence_examples():
    assert exceptional_sequence(3).gaps == (1, 2, 4)
    assert exceptional_sequence(4).gaps == (1, 2, 3, 5)
    assert exceptional_sequence(2).gaps == hyperelliptic_sequence(2).gaps


def test_exceptional_sequence_rejects_genus1():
    with pytest.raises(ValueError):
        exceptional_sequence(1)


@pytest.mark.parametrize("genus", range(1, 31))
def test_hyperelliptic_validates_and_window(genus):
    seq = hyperelliptic_sequence(genus)
    assert seq.validated
    s = complement_semigroup(seq)
    window = [n for n in range(1, 2 * genus + 1) if s.is_member(n)]
    assert window == list(range(2, 2 * genus + 1, 2))
    assert classify(seq) is Classification.HYPERELLIPTIC


@pytest.mark.parametrize("genus", range(2, 31))
def test_exceptional_validates_and_window(genus):
    seq = exceptional_sequence(genus)
    assert seq.validated
    s = complement_semigroup(seq)
    window = [n for n in range(1, 2 * genus) if s.is_member(n)]
    assert window == [genus] + list(range(genus + 2, 2 * genus))


@st.composite
def enumerated_sequence(draw):
    genus = draw(st.integers(1, 7))
    gaps = draw(st.sampled_from(oracle_enumerate(genus)))
    return checked_sequence(gaps, genus)


@given(enumerated_sequence())
@settings(max_examples=100, deadline=None)
def test_ap_runs_partition_gap_set(seq):
    dec = ap_decomposition(seq)
    rebuilt = [j + k * dec.multiplicity for j, length in dec.runs for k in range(length + 1)]
    assert sorted(rebuilt) == list(seq.gaps)
    assert len(rebuilt) == len(set(rebuilt))
