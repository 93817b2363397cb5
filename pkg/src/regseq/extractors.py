"""Constructive extraction of long 2-regular and convex subsequences.

Each extractor follows the corresponding existence argument step by step and
records the branch decisions in the trace of its ExtractionResult.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

import numpy as np

from .core import (
    CONVEX,
    Colouring,
    EmptyInput,
    ExtractionResult,
    InvalidInput,
    InvalidWitness,
    NoValidCovering,
    Rational,
    RegularityWitness,
    SortedSeq,
    TraceStep,
    as_fraction,
    check_int64,
    regularity_witness,
)
from .covering import build_covering, extract_from_covering


# -- integer helpers -------------------------------------------------------

def iroot(n: int, k: int) -> int:
    """Largest m with m**k <= n, for n >= 0 and k >= 1."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def iroot_ceil(n: int, k: int) -> int:
    m = iroot(n, k)
    return m if m**k == n else m + 1


def colouring_bound(N: int, r: int) -> int:
    """ceil(N**(1/r) / 3**r), computed exactly."""
    return -(-iroot_ceil(N, r) // 3**r)


def colouring_threshold_met(N: int, r: int) -> bool:
    return N >= 3 ** (r * r + r)


# -- monochromatic extraction ----------------------------------------------

def _colour_extract(cols: np.ndarray, r: int, offset: int, trace: list) -> tuple[int, list[int]]:
    """Recursive core; ``cols[n-1]`` colours the point n + offset."""
    N = len(cols)
    if r == 1:
        present = np.unique(cols)
        if len(present) != 1:
            raise AssertionError("more colours than the recursion allows")
        return int(present[0]), list(range(offset + 1, offset + N + 1))
    sizes = np.bincount(cols)
    colour = int(np.argmax(sizes))
    members = np.flatnonzero(cols == colour) + 1
    gaps = np.diff(members)
    M = int(gaps.max()) if gaps.size else 1
    # N/(3Mr) >= N^(1/r)/3^r, raised to the r-th power
    covering_suffices = N**r * 3 ** (r * r) >= (3 * M * r) ** r * N
    if covering_suffices or M <= 1:
        C = build_covering(members.tolist(), M)
        res = extract_from_covering(members.tolist(), C)
        trace.append(TraceStep(
            "covering-extract",
            {"colour": colour, "M": M, "l": C.length, "k": C.count, "r": r, "offset": offset},
        ))
        return colour, [x + offset for x in res.sequence]
    g = int(np.argmax(gaps == M))
    lo = int(members[g])  # I = (lo, lo + M), which misses the largest class
    trace.append(TraceStep(
        "recurse-interval",
        {"colour": colour, "M": M, "offset": offset + lo, "length": M - 1, "r": r - 1},
    ))
    return _colour_extract(cols[lo:lo + M - 1], r - 1, offset + lo, trace)


def colouring_extract(c: Colouring) -> tuple[int, ExtractionResult]:
    """A colour i and a 2-regular subsequence of its class.

    Take the largest class and its largest gap M between consecutive members.
    If the M-covering of that class already yields N/(3Mr) >= N^(1/r)/3^r points,
    extract from it; otherwise recurse with one colour fewer into the gap, an
    interval of length M - 1 that the class misses.  When N >= 3^(r^2+r) the
    result has at least N^(1/r)/3^r elements.
    """
    if c.colours.size == 0:
        raise EmptyInput("colouring has no points")
    trace: list[TraceStep] = []
    colour, seq = _colour_extract(np.asarray(c.colours), c.r, 0, trace)
    seq = SortedSeq(seq)
    if any(c.colour_of(x) != colour for x in seq):
        raise AssertionError("extracted sequence is not monochromatic")
    bound = colouring_bound(c.N, c.r) if colouring_threshold_met(c.N, c.r) else 1
    return colour, ExtractionResult(seq, regularity_witness(seq, 2), bound, tuple(trace))


# -- Ruzsa covering and difference sets ------------------------------------

@dataclass(frozen=True)
class TranslateSet:
    """Translates X of Ruzsa's covering lemma for B = [N].

    ``colour_of[n-1]`` is the least x in ``translates`` with n in A - A + x.
    """

    translates: SortedSeq
    N: int
    colour_of: np.ndarray = field(repr=False)

    def translate_for(self, n: int) -> int:
        return int(self.colour_of[n - 1])

    def colouring(self) -> Colouring:
        rank = {x: i + 1 for i, x in enumerate(self.translates)}
        lookup = np.zeros(self.translates[-1] + 1, dtype=np.int64)
        for x, i in rank.items():
            lookup[x] = i
        return Colouring(self.N, len(self.translates), lookup[self.colour_of])


def _check_subset(A: SortedSeq, N: int):
    if not A:
        raise EmptyInput("the set A is empty")
    if N < 1 or A[0] < 1 or A[-1] > N:
        raise InvalidInput(f"A must be a non-empty subset of [1, {N}]")


def _difference_mask(A: np.ndarray) -> tuple[np.ndarray, int]:
    """Indicator of A - A over [-span, span], returned with the offset span."""
    span = int(A[-1] - A[0])
    mask = np.zeros(2 * span + 1, dtype=bool)
    mask[(np.subtract.outer(A, A) + span).ravel()] = True
    return mask, span


def ruzsa_cover(A: Sequence[int], N: int) -> TranslateSet:
    """Greedy maximal X in [N] with A + x pairwise disjoint; then [N] is in A - A + X.

    Scanning b = 1..N in order and keeping b whenever A + b misses every earlier
    translate gives a maximal family, so |X| <= |A + [N]|/|A| <= 2N/|A|.
    """
    A = SortedSeq(A)
    _check_subset(A, N)
    arr = A.to_array()
    occupied = np.zeros(int(arr[-1]) + N + 1, dtype=bool)
    X = []
    for b in range(1, N + 1):
        hit = arr + b
        if not occupied[hit].any():
            occupied[hit] = True
            X.append(b)
    mask, span = _difference_mask(arr)
    points = np.arange(1, N + 1)
    colour_of = np.zeros(N, dtype=np.int64)
    for x in X:
        free = colour_of == 0
        d = points - x
        inside = (d >= -span) & (d <= span)
        covered = np.zeros(N, dtype=bool)
        covered[inside] = mask[d[inside] + span]
        colour_of[free & covered] = x
    if not colour_of.all():
        raise AssertionError("translates fail to cover [N]")
    return TranslateSet(SortedSeq(X), N, colour_of)


def _pair_for(d: int, A: SortedSeq, members: set) -> tuple[int, int]:
    for a in A:
        if a - d in members:
            return a, a - d
    raise AssertionError(f"{d} is not a difference of the set")


def _lift_steps(seq: Sequence[int], pairs: dict[int, tuple[int, int]]) -> list[TraceStep]:
    return [TraceStep("lift", {"d": d, "a": pairs[d][0], "a_prime": pairs[d][1]}) for d in seq]


def _dense_core(A: SortedSeq, N: int, trace: list) -> tuple[list[int], dict[int, tuple[int, int]], int]:
    """2-regular sequence in A - A with witness pairs, plus the colour count r."""
    T = ruzsa_cover(A, N)
    c = T.colouring()
    colour, res = colouring_extract(c)
    x = T.translates[colour - 1]
    trace.append(TraceStep("ruzsa-colour", {"r": c.r, "colour": colour, "x": x, "N": N}))
    trace.extend(res.trace)
    seq = [n - x for n in res.sequence]
    members = set(A)
    pairs = {d: _pair_for(d, A, members) for d in seq}
    return seq, pairs, c.r


def dense_diff_extract(A: Sequence[int], N: int) -> ExtractionResult:
    """2-regular subsequence of A - A for A in [N], via Ruzsa covering and colouring.

    [N] is coloured by the least translate x with n in A - A + x; a monochromatic
    2-regular sequence, shifted by -x, lies in A - A.  Every output element is
    recorded in the trace with a pair (a, a') of A.
    """
    A = SortedSeq(A)
    _check_subset(A, N)
    trace: list[TraceStep] = []
    seq, pairs, r = _dense_core(A, N, trace)
    trace.extend(_lift_steps(seq, pairs))
    bound = colouring_bound(N, r) if colouring_threshold_met(N, r) else 1
    out = SortedSeq(seq)
    return ExtractionResult(out, regularity_witness(out, 2), bound, tuple(trace))


# -- density increment ------------------------------------------------------

@dataclass(frozen=True)
class FiberDecomposition:
    """Base-M digits of a set in [k*M]: each a = q*M + r with 0 <= q < k, 1 <= r <= M."""

    k: int
    M: int
    support: SortedSeq
    fibers: dict
    reps: dict

    @classmethod
    def build(cls, A: Sequence[int], k: int, M: int) -> "FiberDecomposition":
        fibers: dict[int, list[int]] = {}
        for a in A:
            q, r = divmod(a - 1, M)
            if not 0 <= q < k:
                raise InvalidInput(f"{a} lies outside [1, {k * M}]")
            fibers.setdefault(q, []).append(r + 1)
        fibers = {q: SortedSeq(v) for q, v in fibers.items()}
        reps = {q: q * M + f[0] for q, f in fibers.items()}
        return cls(k, M, SortedSeq(sorted(fibers)), fibers, reps)


def sparse_s(delta: Fraction) -> int:
    """Least integer s with 2**s >= 1/(4*delta), i.e. ceil(log2(1/(4 delta)))."""
    s = 0
    while Fraction(2) ** s * 4 * delta < 1:
        s += 1
    while Fraction(2) ** (s - 1) * 4 * delta >= 1:
        s -= 1
    return s


def sparse_threshold_met(N: int, s: int) -> bool:
    return s >= 1 and N >= max((2 * s) ** s, 3 ** (73 * s))


def _sparse_bound(N: int, s: int) -> int:
    """ceil(3**-8 * N**(1/(8s+8)))."""
    return -(-iroot_ceil(N, 8 * s + 8) // 3**8)


def _best_window(A: SortedSeq, N: int, size: int) -> int:
    """Offset t so that [t+1, t+size] holds the most points of A."""
    arr = A.to_array()
    if N <= 2 * size:
        candidates = [0, N - size]
    else:
        candidates = range(0, N - size + 1)
    best_t, best_count = 0, -1
    for t in candidates:
        count = int(np.searchsorted(arr, t + size, side="right") - np.searchsorted(arr, t + 1))
        if count > best_count:
            best_t, best_count = t, count
    return best_t


def _dense_branch(F: FiberDecomposition, offset: int, trace: list, on_lift=None) -> tuple[list[int], dict]:
    """Lift a 2-regular sequence of A1 - A1 to the fiber representatives."""
    k, M = F.k, F.M
    shifted = SortedSeq(q + 1 for q in F.support)
    qseq, qpairs, r = _dense_core(shifted, k, trace)
    lifted: dict[int, tuple[int, int]] = {}
    for e in qseq:
        qa, qb = qpairs[e][0] - 1, qpairs[e][1] - 1
        d = F.reps[qa] - F.reps[qb]
        lifted.setdefault(d, (F.reps[qa] + offset, F.reps[qb] + offset))
    D = SortedSeq(sorted(lifted))
    qgaps = np.diff(qseq)
    X = int(qgaps.min()) if qgaps.size else 0
    if X >= 3:
        l = 2 * M * X + 2 * M
        dgaps = D.gaps()
        if dgaps and not (M * (X - 2) <= min(dgaps) and max(dgaps) <= l):
            raise AssertionError("lifted gaps violate [M(X-2), 2MX+2M]")
    else:
        l = 6 * M
    try:
        C = build_covering(D, l)
    except NoValidCovering as exc:
        raise AssertionError(f"lifted set has an empty interval I_{exc.index}") from exc
    if C.occupancy > 8:
        raise AssertionError(f"lifted set has occupancy {C.occupancy} > 8")
    if on_lift is not None:
        on_lift(D, l)
    res = extract_from_covering(D, C)
    trace.append(TraceStep(
        "dense-branch",
        {"k": k, "M": M, "support": len(F.support), "ell": len(qseq), "X": X,
         "l": l, "occupancy": C.occupancy, "D": len(D)},
    ))
    trace.extend(res.trace)
    return list(res.sequence), lifted


def sparse_diff_extract(A: Sequence[int], N: int, delta: Rational, on_lift=None) -> ExtractionResult:
    """2-regular subsequence of A - A for A in [N] of density >= delta, by density increment.

    With s = ceil(log2(1/(4 delta))) <= 1 this is the dense extractor.  Otherwise
    restrict to a window of length k^s, k = floor(N^(1/s)), where A keeps density
    delta/2, and write each point as q*M + r with M = k^(t-1) over t = s levels.
    If at least half the quotients q occur, extract from the quotient set and
    lift to A - A; otherwise descend into the fullest fiber, whose density is at
    least twice as large, with one level fewer.  At one level left, extract
    directly.  Each output element carries a pair of A in a "lift" trace step.

    ``on_lift(D, l)``, if given, receives the lifted difference set D of a dense
    branch together with the interval length used to cover it.
    """
    A = SortedSeq(A)
    _check_subset(A, N)
    delta = as_fraction(delta)
    if not 0 < delta <= 1:
        raise InvalidInput(f"density must lie in (0, 1], got {delta}")
    if len(A) < delta * N:
        raise InvalidInput(f"|A| = {len(A)} is below delta*N = {delta * N}")
    s = sparse_s(delta)
    if s <= 1:
        return dense_diff_extract(A, N)
    k = iroot(N, s)
    size = k**s
    check_int64(size)
    trace: list[TraceStep] = []
    t0 = _best_window(A, N, size)
    cur = SortedSeq(a - t0 for a in A if t0 < a <= t0 + size)
    offset = t0
    trace.append(TraceStep("recurse-interval", {"offset": t0, "length": size, "s": s, "count": len(cur)}))
    levels = s
    descents = 0
    while True:
        if levels == 1:
            # window halving plus s - 1 doublings: 2^(s-2) delta >= 1/16
            if sparse_threshold_met(N, s) and 16 * len(cur) < k:
                raise AssertionError(f"base density {len(cur)}/{k} is below 1/16")
            qseq, qpairs, _ = _dense_core(cur, k, trace)
            seq = qseq
            pairs = {d: (a + offset, b + offset) for d, (a, b) in qpairs.items()}
            break
        M = k ** (levels - 1)
        F = FiberDecomposition.build(cur, k, M)
        if 2 * len(F.support) >= k:
            seq, pairs = _dense_branch(F, offset, trace, on_lift)
            break
        qstar = max(F.support, key=lambda q: (len(F.fibers[q]), -q))
        descents += 1
        trace.append(TraceStep(
            "fiber-descend",
            {"q": qstar, "M": M, "level": levels, "size": len(F.fibers[qstar]),
             "support": len(F.support), "offset": offset + qstar * M},
        ))
        offset += qstar * M
        cur = F.fibers[qstar]
        levels -= 1
    if descents > s:
        raise AssertionError("density increment exceeded s descents")
    members = set(A)
    for d in seq:
        a, b = pairs[d]
        if a not in members or b not in members or a - b != d:
            raise AssertionError(f"witness pair {pairs[d]} does not produce {d}")
    trace.extend(_lift_steps(seq, pairs))
    out = SortedSeq(seq)
    bound = _sparse_bound(N, s) if sparse_threshold_met(N, s) else 1
    return ExtractionResult(out, regularity_witness(out, 2), bound, tuple(trace))


# -- regular to convex --------------------------------------------------------

def regular_to_convex(B: Sequence[int], W: RegularityWitness) -> ExtractionResult:
    """Strictly convex subsequence of a 2-regular B with at least floor(sqrt|B|/4) terms.

    B is covered by intervals of length 2X; picking from I_{2j^2}, j = 1, 2, ...
    gives steps between 2X(4j+1) and 2X(4j+3), which strictly increase.
    """
    B = SortedSeq(B)
    if W.L > 2 or not W.validates(B):
        raise InvalidWitness(f"{W} does not certify 2-regularity of the input")
    if not B:
        return ExtractionResult(B, CONVEX, 0, (TraceStep("convexify"),))
    X = W.min_gap
    try:
        C = build_covering(B, 2 * X)
    except NoValidCovering as exc:
        raise InvalidWitness(f"2-regular set left interval I_{exc.index} empty") from exc
    arr = B.to_array()
    js = [2 * j * j for j in range(1, isqrt(C.count // 2) + 1)]
    if js:
        lows = C.start + (np.asarray(js) - 1) * C.length
        picks = arr[np.searchsorted(arr, lows)].tolist()
    else:
        picks = [B[0]]
    seq = SortedSeq(picks)
    step = TraceStep("convexify", {"X": X, "k": C.count, "picked": len(seq)})
    return ExtractionResult(seq, CONVEX, isqrt(len(B)) // 4, (step,))
