from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from regseq.core import (
    Colouring,
    EmptyInput,
    ExtractionResult,
    InvalidInput,
    InvalidParameter,
    RegularityWitness,
    SeqOverflowError,
    SortedSeq,
    TraceStep,
    check_convex,
    check_regular,
    difference_set,
    dilate,
    regularity_witness,
    translate,
)

int_sets = st.sets(st.integers(-200, 200), max_size=12).map(sorted)
ratios = st.sampled_from([Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(2), Fraction(3)])


class TestSortedSeq:
    def test_rejects_unsorted_and_duplicates(self):
        with pytest.raises(InvalidInput):
            SortedSeq([1, 3, 2])
        with pytest.raises(InvalidInput):
            SortedSeq([1, 1])

    def test_empty_is_allowed(self):
        assert len(SortedSeq()) == 0

    def test_overflow_checked(self):
        SortedSeq([2**63 - 1])
        with pytest.raises(SeqOverflowError):
            SortedSeq([0, 2**63])
        with pytest.raises(SeqOverflowError):
            translate([2**63 - 2], 5)

    def test_from_numpy(self):
        assert SortedSeq(np.array([1, 5, 9])) == (1, 5, 9)


@pytest.mark.parametrize(
    "A, expected, gaps",
    [
        ([1, 2, 3, 4], True, (1, 1)),
        ([0, 1, 3, 7], False, None),
        ([1, 3, 7, 9], True, (2, 4)),
    ],
)
def test_check_regular_examples(A, expected, gaps):
    assert check_regular(A, 2) is expected
    W = regularity_witness(A, 2)
    if expected:
        assert (W.min_gap, W.max_gap) == gaps
        assert W.validates(A)
    else:
        assert W is None


def test_check_regular_borderline_is_exact():
    # max gap exactly L * min gap must count as regular
    assert check_regular([0, 2, 5], Fraction(3, 2))
    assert not check_regular([0, 2, 6], Fraction(3, 2))
    assert check_regular([0, 3, 7], "4/3")


def test_check_regular_rejects_small_L():
    with pytest.raises(InvalidParameter):
        check_regular([1, 2], Fraction(1, 2))


def test_short_sequences_are_regular_and_convex():
    for A in ([], [5], [1, 100]):
        assert check_regular(A, 1)
        assert check_convex(A)


@pytest.mark.parametrize("A, expected", [([1, 2, 4, 7], True), ([1, 2, 3], False), ([5], True)])
def test_check_convex_examples(A, expected):
    assert check_convex(A) is expected


def test_non_strict_convexity():
    assert check_convex([1, 2, 3], strict=False)
    assert not check_convex([1, 3, 4], strict=False)


def test_difference_set_examples():
    assert difference_set([1]) == (0,)
    assert difference_set([1, 17]) == (-16, 0, 16)
    assert difference_set([1, 17, 257, 273]) == (-272, -256, -240, -16, 0, 16, 240, 256, 272)
    with pytest.raises(EmptyInput):
        difference_set([])


def test_translate_examples():
    assert translate([1, 2, 3], 10) == (11, 12, 13)
    assert translate([5], -5) == (0,)
    assert translate([0, 16], 1) == (1, 17)


@given(int_sets, ratios, ratios)
def test_regularity_monotone_in_L(A, L1, L2):
    lo, hi = sorted([L1, L2])
    if check_regular(A, lo):
        assert check_regular(A, hi)


@given(int_sets, ratios, st.integers(-1000, 1000))
def test_regularity_translation_invariant(A, L, t):
    assert check_regular(translate(A, t), L) == check_regular(A, L)


@given(int_sets.filter(bool))
def test_difference_set_symmetric(A):
    D = difference_set(A)
    assert set(D) == {-d for d in D}
    assert 0 in D
    assert set(D) == {a - b for a in A for b in A}


@given(int_sets, st.integers(-1000, 1000), st.integers(1, 9))
def test_convexity_invariant_under_affine_maps(A, t, d):
    assert check_convex(translate(A, t)) == check_convex(A)
    assert check_convex(dilate(A, d)) == check_convex(A)


def test_witness_validation():
    W = RegularityWitness(2, 4, 2)
    assert W.validates([1, 3, 7, 9])
    assert not W.validates([1, 3, 8])
    assert not RegularityWitness(1, 3, 2).validates([0, 1, 4])


def test_colouring_validation_and_classes():
    c = Colouring(5, 2, [1, 2, 1, 1, 2])
    assert c.colour_class(1) == (1, 3, 4)
    assert c.colour_of(5) == 2
    with pytest.raises(InvalidInput):
        Colouring(3, 2, [1, 3, 1])
    with pytest.raises(InvalidInput):
        Colouring(3, 2, [1, 2])


def test_extraction_result_enforces_invariants():
    W = RegularityWitness(1, 1, 2)
    ExtractionResult([1, 2, 3], W, 3, (TraceStep("refine", {"l": 2}),))
    with pytest.raises(AssertionError):
        ExtractionResult([1, 2, 3], W, 4)
    with pytest.raises(ValueError):
        TraceStep("lift", {})
    TraceStep("convexify")
