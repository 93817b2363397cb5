"""Sets and colourings with no long regular or convex subsequences."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Colouring, InvalidParameter, SeqOverflowError, SortedSeq, check_int64


def _checked_power(base: int, exp: int) -> int:
    try:
        return check_int64(base**exp)
    except SeqOverflowError:
        raise SeqOverflowError(f"{base}^{exp} exceeds the 64-bit range") from None


def _fill_colouring(out: np.ndarray, palette: list[int], M: int, depth: int):
    if depth == 1:
        out[:] = palette[0]
        return
    m = len(palette)
    block = M ** (depth - 1)
    for k in range(M):
        skip = (k - 1) % m
        sub = palette[:skip] + palette[skip + 1:]
        _fill_colouring(out[k * block:(k + 1) * block], sub, M, depth - 1)


def build_colouring(r: int, M: int) -> Colouring:
    """r-colouring of [M^r] in which every class has R_2 <= 2(r-1)! M and C <= r! M.

    [M^r] is split into M blocks I_k of length M^(r-1), k = 0..M-1.  Block I_k
    avoids the colour at position k (mod r) of the current palette (1-indexed)
    and is coloured recursively with the remaining r - 1 colours, so every r
    consecutive blocks include one that misses any given colour.
    """
    if r < 1 or M < 2:
        raise InvalidParameter("need r >= 1 and M >= 2")
    N = _checked_power(M, r)
    out = np.zeros(N, dtype=np.int64)
    _fill_colouring(out, list(range(1, r + 1)), M, r)
    return Colouring(N, r, out)


@dataclass(frozen=True)
class CantorLevel:
    """Level i: A_i is the union of [start, start + length) over ``starts``."""

    index: int
    block: int  # N_i = (2K)^(k-i)
    length: int  # (K-1) * N_i; equals N at level 0
    starts: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.starts) * self.length

    def points(self) -> SortedSeq:
        offsets = np.arange(self.length, dtype=np.int64)
        return SortedSeq((self.starts[:, None] + offsets[None, :]).ravel())

    def contains(self, n: int) -> bool:
        i = np.searchsorted(self.starts, n, side="right") - 1
        return i >= 0 and n < self.starts[i] + self.length


@dataclass(frozen=True)
class CantorStructure:
    k: int
    K: int
    N: int
    levels: tuple[CantorLevel, ...]

    def level_set(self, i: int) -> SortedSeq:
        return self.levels[i].points()

    @property
    def final(self) -> SortedSeq:
        return self.level_set(self.k)


def build_cantor(k: int, K: int) -> CantorStructure:
    """Nested sets A_k in ... in A_0 = [N], N = (K-1)(2K)^k.

    Each level-(i-1) interval is cut into 2K(K-1) pieces of length N_i and the
    pieces with index divisible by K are removed; the surviving runs of K-1
    pieces are the level-i intervals.
    """
    if k < 1 or K < 2:
        raise InvalidParameter("need k >= 1 and K >= 2")
    N = check_int64((K - 1) * _checked_power(2 * K, k))
    levels = [CantorLevel(0, (2 * K) ** k, N, np.array([1], dtype=np.int64))]
    runs = np.arange(2 * (K - 1), dtype=np.int64) * K + 1  # first piece of each kept run
    for i in range(1, k + 1):
        Ni = (2 * K) ** (k - i)
        parent = levels[-1].starts
        starts = (parent[:, None] + runs[None, :] * Ni).ravel()
        levels.append(CantorLevel(i, Ni, (K - 1) * Ni, starts))
    return CantorStructure(k, K, N, tuple(levels))


def check_cantor_structure(cs: CantorStructure) -> list[str]:
    """Violations of the nesting and size properties; empty when all hold.

    Checks for each level i >= 1 that |A_i| >= (1 - 1/K)|A_{i-1}| (with equality
    in fact), that the intervals have length (K-1)N_i, are disjoint and ordered,
    and that each lies inside an interval of the previous level.
    """
    problems = []
    K = cs.K
    if cs.levels[0].size != cs.N or cs.levels[0].starts.tolist() != [1]:
        problems.append("A_0 is not [N]")
    for prev, cur in zip(cs.levels, cs.levels[1:]):
        i = cur.index
        if cur.block != (2 * K) ** (cs.k - i) or cur.length != (K - 1) * cur.block:
            problems.append(f"level {i}: wrong interval length")
        if cur.size * K < (K - 1) * prev.size:
            problems.append(f"level {i}: |A_i| < (1 - 1/K)|A_(i-1)|")
        if cur.size * K != (K - 1) * prev.size:
            problems.append(f"level {i}: |A_i| != (1 - 1/K)|A_(i-1)|")
        s = cur.starts
        if len(s) > 1 and np.any(s[1:] < s[:-1] + cur.length + 1):
            problems.append(f"level {i}: intervals overlap or touch")
        owner = np.searchsorted(prev.starts, s, side="right") - 1
        if np.any(owner < 0) or np.any(s + cur.length > prev.starts[owner] + prev.length):
            problems.append(f"level {i}: interval escapes its parent")
    return problems


def build_density_example(k: int) -> SortedSeq:
    """A set of density >= 1/2 in [(2k-1)(4k)^k]: the last level of build_cantor(k, 2k)."""
    return build_cantor(k, 2 * k).final


def build_difference_example(n: int) -> SortedSeq:
    """A_1 = {1}, A_(i+1) = A_i + {0, 16^i}, so |A_n| = 2^(n-1); A_n - A_n has R_2 <= 3 and C <= 2n."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    if n > 15:
        raise SeqOverflowError("2 * 16^(n-1) exceeds the 64-bit range for n > 15")
    A = [1]
    for i in range(1, n):
        A = A + [16**i + a for a in A]
    return SortedSeq(A)
