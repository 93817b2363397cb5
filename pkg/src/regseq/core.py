"""Domain types and elementary operations on strictly increasing integer sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Rational = Union[int, Fraction, str]


class RegSeqError(Exception):
    """Base class for domain errors."""


class InvalidParameter(RegSeqError, ValueError):
    pass


class InvalidInput(RegSeqError, ValueError):
    pass


class EmptyInput(RegSeqError, ValueError):
    pass


class InvalidWitness(RegSeqError, ValueError):
    pass


class InvalidCovering(RegSeqError, ValueError):
    pass


class NoValidCovering(RegSeqError, ValueError):
    """Raised when some interval of a proposed covering misses the set."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"interval I_{index} is empty")


class TooLarge(RegSeqError, ValueError):
    pass


class SeqOverflowError(RegSeqError, OverflowError):
    pass


def check_int64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise SeqOverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def as_fraction(L: Rational) -> Fraction:
    try:
        return Fraction(L)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameter(f"cannot read {L!r} as a rational") from exc


class SortedSeq(tuple):
    """A strictly increasing, possibly empty, tuple of 64-bit integers."""

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        if isinstance(elements, SortedSeq):
            return elements
        if isinstance(elements, np.ndarray):
            elements = elements.tolist()
        items = tuple(int(x) for x in elements)
        for a, b in zip(items, items[1:]):
            if not a < b:
                raise InvalidInput(f"sequence is not strictly increasing at {a}, {b}")
        if items:
            check_int64(items[0])
            check_int64(items[-1])
        return super().__new__(cls, items)

    @classmethod
    def from_set(cls, elements: Iterable[int]) -> "SortedSeq":
        return cls(sorted(set(int(x) for x in elements)))

    def gaps(self) -> list[int]:
        return [b - a for a, b in zip(self, self[1:])]

    def to_array(self) -> np.ndarray:
        return np.asarray(self, dtype=np.int64)

    def __repr__(self) -> str:
        if len(self) > 12:
            head = ", ".join(map(str, self[:5]))
            tail = ", ".join(map(str, self[-3:]))
            return f"SortedSeq([{head}, ..., {tail}] len={len(self)})"
        return f"SortedSeq({list(self)})"


@dataclass(frozen=True)
class RegularityWitness:
    """Certifies L-regularity: every gap lies in [min_gap, max_gap] and max_gap <= L*min_gap.

    ``min_gap`` plays the role of the scale X in the definition.  Sequences with
    fewer than two elements have no gaps; their witness uses ``min_gap = max_gap = 1``.
    """

    min_gap: int
    max_gap: int
    L: Fraction

    def __post_init__(self):
        object.__setattr__(self, "L", as_fraction(self.L))
        if self.min_gap < 1 or self.max_gap < self.min_gap:
            raise InvalidWitness(f"bad gap range [{self.min_gap}, {self.max_gap}]")

    @property
    def X(self) -> int:
        return self.min_gap

    def validates(self, seq: Sequence[int]) -> bool:
        if self.max_gap > self.L * self.min_gap:
            return False
        if len(seq) < 2:
            return True
        gaps = [b - a for a, b in zip(seq, seq[1:])]
        return min(gaps) == self.min_gap and max(gaps) == self.max_gap


@dataclass(frozen=True)
class ConvexityMarker:
    strict: bool = True

    def validates(self, seq: Sequence[int]) -> bool:
        return check_convex(seq, strict=self.strict)


CONVEX = ConvexityMarker()

Witness = Union[RegularityWitness, ConvexityMarker]


@dataclass(frozen=True)
class Covering:
    """Consecutive half-open intervals [start + (j-1)*length, start + j*length), j = 1..count."""

    start: int
    length: int
    count: int
    occupancy: int
    occupancies: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "occupancies", tuple(int(c) for c in self.occupancies))
        if self.length < 1 or self.count < 1 or self.occupancy < 1:
            raise InvalidCovering("length, count and occupancy must be positive")
        if len(self.occupancies) != self.count:
            raise InvalidCovering("occupancies must list one count per interval")

    def interval(self, j: int) -> tuple[int, int]:
        """Bounds (lo, hi) of I_j, 1-indexed, as a half-open range."""
        lo = self.start + (j - 1) * self.length
        return lo, lo + self.length

    @property
    def end(self) -> int:
        return self.start + self.count * self.length

    def is_valid_for(self, A: Sequence[int]) -> bool:
        if not A or A[0] < self.start or A[-1] >= self.end:
            return False
        counts = np.bincount(
            (np.asarray(A, dtype=np.int64) - self.start) // self.length,
            minlength=self.count,
        )
        if len(counts) != self.count:
            return False
        return (
            bool(np.all(counts >= 1))
            and int(counts.max()) <= self.occupancy
            and tuple(counts.tolist()) == self.occupancies
        )


@dataclass(frozen=True)
class Colouring:
    """Partition of [N] into r classes; ``colours[n-1]`` is the colour (1..r) of n."""

    N: int
    r: int
    colours: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.array(self.colours, dtype=np.int64)
        if self.N < 1 or self.r < 1:
            raise InvalidInput("N and r must be positive")
        if arr.shape != (self.N,):
            raise InvalidInput(f"expected {self.N} colours, got shape {arr.shape}")
        if arr.size and (arr.min() < 1 or arr.max() > self.r):
            raise InvalidInput(f"colours must lie in 1..{self.r}")
        arr.flags.writeable = False
        object.__setattr__(self, "colours", arr)

    def colour_of(self, n: int) -> int:
        return int(self.colours[n - 1])

    def colour_class(self, i: int) -> SortedSeq:
        return SortedSeq(np.flatnonzero(self.colours == i) + 1)

    def classes(self) -> list[SortedSeq]:
        return [self.colour_class(i) for i in range(1, self.r + 1)]

    def __eq__(self, other):
        if not isinstance(other, Colouring):
            return NotImplemented
        return (
            self.N == other.N
            and self.r == other.r
            and np.array_equal(self.colours, other.colours)
        )

    __hash__ = None


TRACE_KINDS = frozenset(
    {
        "covering-extract",
        "recurse-interval",
        "ruzsa-colour",
        "fiber-descend",
        "dense-branch",
        "lift",
        "refine",
        "convexify",
    }
)


@dataclass(frozen=True)
class TraceStep:
    kind: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in TRACE_KINDS:
            raise ValueError(f"unknown trace kind {self.kind!r}")
        params = {str(k): int(v) for k, v in dict(self.params).items()}
        if not params and self.kind != "convexify":
            raise ValueError(f"trace step {self.kind!r} needs parameters")
        object.__setattr__(self, "params", params)

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params)}


@dataclass(frozen=True)
class ExtractionResult:
    sequence: SortedSeq
    witness: Witness
    claimed_lower_bound: int
    trace: tuple[TraceStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sequence", SortedSeq(self.sequence))
        object.__setattr__(self, "trace", tuple(self.trace))
        if self.claimed_lower_bound < 0:
            raise ValueError("claimed lower bound must be non-negative")
        if not self.witness.validates(self.sequence):
            raise InvalidWitness(f"{self.sequence!r} does not satisfy {self.witness}")
        if len(self.sequence) < self.claimed_lower_bound:
            raise AssertionError(
                f"extracted length {len(self.sequence)} is below the claimed "
                f"bound {self.claimed_lower_bound}"
            )

    def __len__(self) -> int:
        return len(self.sequence)

    def witness_pairs(self) -> dict[int, tuple[int, int]]:
        """Map each output difference d to its recorded (a, a') with d = a - a'."""
        return {
            s.params["d"]: (s.params["a"], s.params["a_prime"])
            for s in self.trace
            if s.kind == "lift" and "d" in s.params
        }

    def steps(self, kind: str) -> list[TraceStep]:
        return [s for s in self.trace if s.kind == kind]


def regularity_witness(A: Sequence[int], L: Rational) -> RegularityWitness | None:
    """Witness for the L-regularity of ``A``, or None when ``A`` is not L-regular."""
    L = as_fraction(L)
    if L < 1:
        raise InvalidParameter(f"L must be at least 1, got {L}")
    gaps = [b - a for a, b in zip(A, A[1:])]
    if not gaps:
        return RegularityWitness(1, 1, L)
    lo, hi = min(gaps), max(gaps)
    if lo < 1:
        raise InvalidInput("sequence is not strictly increasing")
    if hi * L.denominator > L.numerator * lo:
        return None
    return RegularityWitness(lo, hi, L)


def check_regular(A: Sequence[int], L: Rational) -> bool:
    """True iff ``A`` has at most two elements or max gap <= L * min gap."""
    return regularity_witness(A, L) is not None


def check_convex(A: Sequence[int], strict: bool = True) -> bool:
    """True iff consecutive differences of ``A`` increase (strictly by default)."""
    gaps = [b - a for a, b in zip(A, A[1:])]
    if strict:
        return all(g < h for g, h in zip(gaps, gaps[1:]))
    return all(g <= h for g, h in zip(gaps, gaps[1:]))


def difference_set(A: Sequence[int]) -> SortedSeq:
    if len(A) == 0:
        raise EmptyInput("difference set of an empty set")
    arr = np.asarray(A, dtype=object if _needs_bigint(A) else np.int64)
    if arr.dtype == object:
        return SortedSeq.from_set(a - b for a in A for b in A)
    return SortedSeq(np.unique(np.subtract.outer(arr, arr)))


def _needs_bigint(A: Sequence[int]) -> bool:
    return max(abs(int(A[0])), abs(int(A[-1]))) > 2**62


def translate(A: Sequence[int], t: int) -> SortedSeq:
    if A:
        check_int64(A[0] + t)
        check_int64(A[-1] + t)
    return SortedSeq(a + t for a in A)


def dilate(A: Sequence[int], d: int) -> SortedSeq:
    if d < 1:
        raise InvalidParameter("dilation factor must be positive")
    return SortedSeq(a * d for a in A)
