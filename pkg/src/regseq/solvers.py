"""Exact computation of R_L(A) and C(A), with exhaustive oracles."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    CONVEX,
    ConvexityMarker,
    InvalidParameter,
    Rational,
    SortedSeq,
    TooLarge,
    Witness,
    as_fraction,
    check_convex,
    regularity_witness,
)

BRUTE_LIMIT = 20


@dataclass(frozen=True)
class SolveResult:
    length: int
    subsequence: SortedSeq
    witness: Witness

    def __post_init__(self):
        if len(self.subsequence) != self.length:
            raise ValueError("length does not match the witness subsequence")
        if not self.witness.validates(self.subsequence):
            raise ValueError("witness subsequence fails its own witness")


def _regular_result(best: Sequence[int], L) -> SolveResult:
    seq = SortedSeq(best)
    return SolveResult(len(seq), seq, regularity_witness(seq, L))


def _check_L(L: Rational):
    L = as_fraction(L)
    if L < 1:
        raise InvalidParameter(f"L must be at least 1, got {L}")
    return L


def _longest_chain(a: Sequence[int], lo: int, hi: int) -> list[int]:
    """Lexicographically smallest longest chain in ``a`` whose steps all lie in [lo, hi].

    ``f[i]`` is the longest chain starting at index i; it is filled right to left
    with a sliding-window maximum, since the admissible successors of i form an
    index window whose ends move left as i decreases.
    """
    n = len(a)
    f = [1] * n
    window: deque[int] = deque()  # indices, f decreasing
    right = n  # next index to admit, moving left
    for i in range(n - 1, -1, -1):
        while right - 1 > i and a[right - 1] - a[i] >= lo:
            right -= 1
            j = right
            if a[j] - a[i] <= hi:
                while window and f[window[-1]] <= f[j]:
                    window.pop()
                window.append(j)
        # admitted indices whose step from a[i] now exceeds hi leave for good
        while window and a[window[0]] - a[i] > hi:
            window.popleft()
        if window:
            f[i] = f[window[0]] + 1
    best = max(f)
    start = f.index(best)
    chain = [a[start]]
    i = start
    while f[i] > 1:
        p = bisect_left(a, a[i] + lo)
        q = bisect_right(a, a[i] + hi)
        i = next(j for j in range(p, q) if f[j] == f[i] - 1)
        chain.append(a[i])
    return chain


def exact_r_l(A: Sequence[int], L: Rational = 2, threshold: int | None = None) -> SolveResult:
    """Length and witness of a longest L-regular subset of ``A``.

    Every L-regular subset has its minimum gap among the pairwise differences of
    ``A``, so for each such candidate X the problem is a longest chain whose steps
    lie in [X, floor(L*X)].  Ties are broken towards the lexicographically
    smallest element list.

    With ``threshold`` set, returns as soon as any subset longer than the
    threshold is found (the result is then not necessarily optimal).
    """
    L = _check_L(L)
    a = list(SortedSeq(A))
    n = len(a)
    if n <= 2:
        return _regular_result(a, L)
    candidates = sorted({y - x for i, x in enumerate(a) for y in a[i + 1:]})
    best = a[:1]
    for X in candidates:
        hi = (L.numerator * X) // L.denominator
        # a chain of length m needs span >= (m - 1) * X
        if (a[-1] - a[0]) // X + 1 < len(best):
            break
        chain = _longest_chain(a, X, hi)
        if len(chain) > len(best) or (len(chain) == len(best) and chain < best):
            best = chain
            if threshold is not None and len(best) > threshold:
                break
    return _regular_result(best, L)


def exact_convex(A: Sequence[int], strict: bool = True) -> SolveResult:
    """Length and witness of a longest convex subsequence of ``A``.

    Dynamic program over ordered pairs: ``h[i][j]`` is the longest convex chain
    starting a[i], a[j].  Rows are filled right to left; the successors of the
    pair (i, j) are exactly the suffix of indices past a[j] + (a[j] - a[i]), so
    a suffix maximum per row gives each entry by binary search.
    """
    a = list(SortedSeq(A))
    n = len(a)
    marker = CONVEX if strict else ConvexityMarker(strict=False)
    if n <= 2:
        seq = SortedSeq(a)
        return SolveResult(n, seq, marker)
    cut = bisect_right if strict else bisect_left
    h = [[0] * n for _ in range(n)]
    sufmax = [[0] * (n + 1) for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = h[i]
        for j in range(i + 1, n):
            p = cut(a, 2 * a[j] - a[i], j + 1)
            row[j] = max(2, 1 + sufmax[j][p])
        s = sufmax[i]
        for j in range(n - 1, -1, -1):
            s[j] = max(s[j + 1], row[j])
    best = max(sufmax[i][0] for i in range(n))
    i = next(i for i in range(n) if sufmax[i][0] == best)
    j = next(j for j in range(i + 1, n) if h[i][j] == best)
    chain = [a[i], a[j]]
    while h[i][j] > 2:
        p = cut(a, 2 * a[j] - a[i], j + 1)
        nxt = next(l for l in range(p, n) if h[j][l] == h[i][j] - 1)
        i, j = j, nxt
        chain.append(a[j])
    seq = SortedSeq(chain)
    return SolveResult(len(seq), seq, marker)


def _brute(A: Sequence[int], accept) -> SortedSeq:
    a = SortedSeq(A)
    if len(a) > BRUTE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_LIMIT} elements, got {len(a)}")
    for size in range(len(a), 0, -1):
        for subset in combinations(a, size):
            if accept(subset):
                return SortedSeq(subset)
    return SortedSeq()


def brute_r_l(A: Sequence[int], L: Rational = 2) -> SolveResult:
    """Exhaustive oracle for R_L: scans subsets from largest, lexicographic order."""
    L = _check_L(L)
    seq = _brute(A, lambda s: regularity_witness(s, L) is not None)
    return _regular_result(seq, L)


def brute_convex(A: Sequence[int], strict: bool = True) -> SolveResult:
    seq = _brute(A, lambda s: check_convex(s, strict=strict))
    return SolveResult(len(seq), seq, CONVEX if strict else ConvexityMarker(strict=False))
