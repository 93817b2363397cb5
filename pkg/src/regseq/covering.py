"""M-coverings by consecutive intervals, and the extractions built on them."""

from __future__ import annotations

from fractions import Fraction
from math import ceil
from typing import Sequence

import numpy as np

from .core import (
    Covering,
    EmptyInput,
    ExtractionResult,
    InvalidCovering,
    InvalidParameter,
    InvalidWitness,
    NoValidCovering,
    Rational,
    RegularityWitness,
    SortedSeq,
    TraceStep,
    as_fraction,
    regularity_witness,
)


def _interval_counts(A: np.ndarray, start: int, length: int, count: int) -> np.ndarray:
    return np.bincount((A - start) // length, minlength=count)


def build_covering(A: Sequence[int], l: int) -> Covering:
    """Cover ``A`` by consecutive intervals of length ``l`` anchored at min(A).

    Raises NoValidCovering, naming the first empty interval, if the intervals
    do not all meet ``A``.
    """
    A = SortedSeq(A)
    if not A:
        raise EmptyInput("cannot cover an empty set")
    if l < 1:
        raise InvalidParameter("interval length must be positive")
    start = A[0]
    k = -(-(A[-1] - start + 1) // l)
    counts = _interval_counts(A.to_array(), start, l, k)
    empty = np.flatnonzero(counts == 0)
    if empty.size:
        j = int(empty[0]) + 1
        lo = start + (j - 1) * l
        raise NoValidCovering(j, f"interval I_{j} = [{lo}, {lo + l}) contains no element")
    return Covering(start, l, k, int(counts.max()), tuple(counts.tolist()))


def _smallest_in_intervals(A: np.ndarray, C: Covering, js: np.ndarray) -> list[int]:
    """Smallest element of ``A`` in each interval I_j, for the 1-indexed ``js``."""
    lows = C.start + (js - 1) * C.length
    idx = np.searchsorted(A, lows, side="left")
    return A[idx].tolist()


def extract_from_covering(A: Sequence[int], C: Covering) -> ExtractionResult:
    """Pick the smallest element of each I_j with j = 1 (mod 3).

    Picks three intervals apart differ by more than 2l and less than 4l, so the
    result is 2-regular with at least ceil(k/3) >= |A|/(3M) elements.
    """
    A = SortedSeq(A)
    if not C.is_valid_for(A):
        raise InvalidCovering("covering does not cover the set with non-empty intervals")
    arr = A.to_array()
    js = np.arange(1, C.count + 1, 3)
    picks = _smallest_in_intervals(arr, C, js)
    seq = SortedSeq(picks)
    gaps = seq.gaps()
    if gaps and not (2 * C.length <= min(gaps) and max(gaps) <= 4 * C.length):
        raise AssertionError("covering extraction produced gaps outside [2l, 4l]")
    step = TraceStep(
        "covering-extract",
        {"M": C.occupancy, "l": C.length, "k": C.count, "X": 2 * C.length, "s": C.start},
    )
    return ExtractionResult(seq, regularity_witness(seq, 2), len(js), (step,))


def cover_regular(A: Sequence[int], L: Rational, W: RegularityWitness) -> Covering:
    """A ceil(L)-covering of an L-regular sequence by intervals of length ceil(L*X)."""
    A = SortedSeq(A)
    L = as_fraction(L)
    if W.L > L or not W.validates(A):
        raise InvalidWitness(f"{W} does not certify {L}-regularity of the input")
    l = ceil(L * W.min_gap)
    C = build_covering(A, l)
    if C.occupancy > ceil(L):
        raise AssertionError(f"occupancy {C.occupancy} exceeds ceil(L) = {ceil(L)}")
    return C


def refine_regularity(A: Sequence[int], W: RegularityWitness, l: int) -> ExtractionResult:
    """Thin a 2-regular set to a (1 + 1/l)-regular subset of size >= |A|/(4l+2).

    Cover by intervals of length 2X and keep the smallest element of every
    q-th interval, q = 2l + 1: consecutive picks are more than (q-1)*2X and
    less than (q+1)*2X apart.
    """
    A = SortedSeq(A)
    if l < 2:
        raise InvalidParameter(f"l must be at least 2, got {l}")
    if W.L > 2 or not W.validates(A):
        raise InvalidWitness(f"{W} does not certify 2-regularity of the input")
    if not A:
        raise EmptyInput("cannot refine an empty set")
    X = W.min_gap
    q = 2 * l + 1
    try:
        C = build_covering(A, 2 * X)
    except NoValidCovering as exc:
        raise InvalidWitness(f"2-regular set left interval I_{exc.index} empty") from exc
    js = np.arange(1, C.count + 1, q)
    seq = SortedSeq(_smallest_in_intervals(A.to_array(), C, js))
    gaps = seq.gaps()
    if gaps and not ((q - 1) * 2 * X < min(gaps) and max(gaps) < (q + 1) * 2 * X):
        raise AssertionError("refined gaps fall outside ((q-1)2X, (q+1)2X)")
    target = 1 + Fraction(1, l)
    witness = regularity_witness(seq, target)
    if witness is None:
        raise AssertionError(f"refined sequence is not {target}-regular")
    step = TraceStep("refine", {"X": X, "l": l, "q": q, "k": C.count, "picked": len(seq)})
    return ExtractionResult(seq, witness, -(-len(A) // (2 * q)), (step,))
