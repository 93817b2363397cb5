"""Seeded verification suites, one per theorem checked at desk scale.

Randomness: a single integer seed feeds ``numpy.random.SeedSequence``; trial
``i`` of a suite draws from ``default_rng(SeedSequence(seed).spawn(n)[i])``, so
each trial is reproducible on its own and independent of the others.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, isqrt
from typing import Callable

import numpy as np

from .constructions import (
    build_cantor,
    build_colouring,
    build_density_example,
    build_difference_example,
    check_cantor_structure,
)
from .core import Colouring, check_convex, check_regular, difference_set, regularity_witness
from .covering import refine_regularity
from .extractors import (
    colouring_bound,
    colouring_extract,
    dense_diff_extract,
    regular_to_convex,
    ruzsa_cover,
    sparse_diff_extract,
    sparse_s,
)
from .solvers import brute_convex, brute_r_l, exact_convex, exact_r_l


@dataclass
class SuiteReport:
    name: str
    trials: int = 0
    failures: list[str] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        stats = ", ".join(f"{k}={v}" for k, v in self.summary.items())
        return f"[{status}] {self.name}: {self.trials} trials" + (f"; {stats}" if stats else "")

    def text(self) -> str:
        lines = [self.line()]
        lines += [f"  - {msg}" for msg in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


def trial_rngs(seed: int, n: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def _random_subset(rng, lo: int, hi: int, size: int) -> list[int]:
    return sorted((rng.choice(hi - lo + 1, size, replace=False) + lo).tolist())


def _random_regular(rng, X: int, n: int) -> list[int]:
    start = int(rng.integers(-10**6, 10**6))
    gaps = rng.integers(X, 2 * X + 1, size=max(n - 1, 0))
    return (start + np.concatenate([[0], np.cumsum(gaps)])).astype(np.int64).tolist()


def _random_partition(rng, N: int, r: int) -> Colouring:
    if rng.random() < 0.5:
        weights = rng.dirichlet(np.ones(r))
        colours = rng.choice(r, size=N, p=weights) + 1
    else:
        # runs of random length, so classes have long gaps
        mean = float(rng.uniform(1, max(2.0, N ** 0.5)))
        lengths = rng.geometric(1 / mean, size=N)
        labels = rng.integers(1, r + 1, size=N)
        colours = np.repeat(labels, lengths)[:N]
    return Colouring(N, r, colours)


def _timed(fn: Callable[..., SuiteReport]):
    def wrapper(*args, **kwargs) -> SuiteReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def oracle_equivalence(trials: int = 500, seed: int = 0) -> SuiteReport:
    """exact solvers agree with exhaustive search on random A in [1, 100], |A| <= 13."""
    rep = SuiteReport("oracle-equivalence", trials)
    Ls = (Fraction(3, 2), Fraction(2), Fraction(3))
    for t, rng in enumerate(trial_rngs(seed, trials)):
        A = _random_subset(rng, 1, 100, int(rng.integers(0, 14)))
        for L in Ls:
            e, b = exact_r_l(A, L).length, brute_r_l(A, L).length
            if e != b:
                rep.failures.append(f"trial {t}: R_{L}({A}) exact {e} != brute {b}")
        e, b = exact_convex(A).length, brute_convex(A).length
        if e != b:
            rep.failures.append(f"trial {t}: C({A}) exact {e} != brute {b}")
    return rep


def _check_colouring_result(c: Colouring, need: int, label: str, rep: SuiteReport) -> int:
    colour, res = colouring_extract(c)
    seq = res.sequence
    if any(c.colour_of(x) != colour for x in seq):
        rep.failures.append(f"{label}: not monochromatic")
    if not check_regular(seq, 2):
        rep.failures.append(f"{label}: not 2-regular")
    if len(seq) < need:
        rep.failures.append(f"{label}: length {len(seq)} < {need}")
    return len(seq)


@_timed
def colouring(trials: int = 100, big_trials: int = 10, seed: int = 0) -> SuiteReport:
    """monochromatic 2-regular sequences of length >= N^(1/r)/3^r at N = 3^(r^2+r)."""
    rep = SuiteReport("colouring", trials + big_trials)
    rngs = trial_rngs(seed, trials + big_trials)
    lengths = []
    for t in range(trials):
        c = _random_partition(rngs[t], 729, 2)
        lengths.append(_check_colouring_result(c, colouring_bound(729, 2), f"r=2 trial {t}", rep))
    for t in range(trials, trials + big_trials):
        c = _random_partition(rngs[t], 531441, 3)
        lengths.append(_check_colouring_result(c, colouring_bound(531441, 3), f"r=3 trial {t}", rep))
    rep.summary = {"bound_r2": colouring_bound(729, 2), "bound_r3": colouring_bound(531441, 3),
                   "min_length": min(lengths, default=0)}
    return rep


@_timed
def colouring_construction(r: int = 2, Ms: range = range(4, 13), seed: int = 0) -> SuiteReport:
    """every class of build_colouring(r, M) has R_2 <= 2(r-1)!M and C <= r!M."""
    rep = SuiteReport("colouring-construction", len(Ms))
    worst = 0.0
    for M in Ms:
        c = build_colouring(r, M)
        r_cap, c_cap = 2 * factorial(r - 1) * M, factorial(r) * M
        for i, cls in enumerate(c.classes(), start=1):
            if not cls:
                continue
            R2, C = exact_r_l(cls, 2).length, exact_convex(cls).length
            worst = max(worst, R2 / r_cap, C / c_cap)
            if R2 > r_cap:
                rep.failures.append(f"M={M} colour {i}: R_2 = {R2} > {r_cap}")
            if C > c_cap:
                rep.failures.append(f"M={M} colour {i}: C = {C} > {c_cap}")
        _check_colouring_result(c, 1, f"M={M} extraction", rep)
    rep.summary = {"worst_ratio": round(worst, 3)}
    return rep


@_timed
def cantor(k_max: int = 5, K_max: int = 8, seed: int = 0) -> SuiteReport:
    """Cantor levels nest with |A_i| = (1 - 1/K)|A_(i-1)|; k=2 density example checks."""
    rep = SuiteReport("cantor", 0)
    for k in range(1, k_max + 1):
        for K in range(2, K_max + 1):
            rep.trials += 1
            for problem in check_cantor_structure(build_cantor(k, K)):
                rep.failures.append(f"k={k} K={K}: {problem}")
    A = build_density_example(2)
    N = 3 * 8**2
    R2, C = exact_r_l(A, 2).length, exact_convex(A).length
    if len(A) != 108 or 2 * len(A) < N:
        rep.failures.append(f"density example: |A| = {len(A)}, expected 108 >= {N}/2")
    if R2 > 16 * 2**2:
        rep.failures.append(f"density example: R_2 = {R2} > 64")
    if C > 24 * 2**3:
        rep.failures.append(f"density example: C = {C} > 192")
    rep.summary = {"k2_size": len(A), "k2_R2": R2, "k2_C": C}
    return rep


@_timed
def difference_construction(n_max: int = 5, seed: int = 0) -> SuiteReport:
    """R_2(A_n - A_n) <= 3 and C(A_n - A_n) <= 2n; decision mode from n = 5 on."""
    rep = SuiteReport("difference-construction", n_max)
    found = {}
    for n in range(1, n_max + 1):
        D = difference_set(build_difference_example(n))
        if n <= 4:
            R2 = exact_r_l(D, 2).length
        else:
            R2 = exact_r_l(D, 2, threshold=3).length
        C = exact_convex(D).length
        found[f"n{n}"] = f"{R2}/{C}"
        if R2 > 3:
            rep.failures.append(f"n={n}: R_2 = {R2} > 3")
        if C > 2 * n:
            rep.failures.append(f"n={n}: C = {C} > {2 * n}")
    rep.summary = found
    return rep


def _check_pairs(res, A: set, label: str, rep: SuiteReport):
    pairs = res.witness_pairs()
    for d in res.sequence:
        if d not in pairs:
            rep.failures.append(f"{label}: no witness pair for {d}")
            return
        a, b = pairs[d]
        if a not in A or b not in A or a - b != d:
            rep.failures.append(f"{label}: bad witness pair {(a, b)} for {d}")
            return


@_timed
def dense_difference(trials: int = 100, seed: int = 0) -> SuiteReport:
    """A in [729] with |A| >= 487 gives a 2-regular subset of A - A of length >= 3."""
    rep = SuiteReport("dense-difference", trials)
    lengths = []
    for t, rng in enumerate(trial_rngs(seed, trials)):
        A = _random_subset(rng, 1, 729, int(rng.integers(487, 730)))
        res = dense_diff_extract(A, 729)
        _check_pairs(res, set(A), f"trial {t}", rep)
        if not check_regular(res.sequence, 2):
            rep.failures.append(f"trial {t}: not 2-regular")
        if len(res) < 3:
            rep.failures.append(f"trial {t}: length {len(res)} < 3")
        lengths.append(len(res))
    rep.summary = {"min_length": min(lengths, default=0)}
    return rep


def _sparse_instance(rng, delta: Fraction) -> tuple[list[int], int]:
    N = int(rng.integers(64, 4097))
    size = -(-delta.numerator * N // delta.denominator)
    mode = int(rng.integers(0, 3))
    if mode == 0:
        return _random_subset(rng, 1, N, size), N
    if mode == 1:
        # packed into a quarter-length window: few quotients, fibers get dense
        w = max(size, N // 4)
        lo = int(rng.integers(1, N - w + 2))
        return _random_subset(rng, lo, lo + w - 1, size), N
    # a sparse comb of short runs spread across [N]
    run = int(rng.integers(1, 5))
    starts = _random_subset(rng, 1, N - run + 1, min(N - run + 1, -(-size // run)))
    A = {x + j for x in starts for j in range(run)}
    if len(A) < size:
        rest = sorted(set(range(1, N + 1)) - A)
        A.update(rng.choice(rest, size - len(A), replace=False).tolist())
    return sorted(A), N


@_timed
def sparse_difference(trials: int = 100, seed: int = 0) -> SuiteReport:
    """density increment: at most s descents, witness pairs, 2-regular, lifted 8-coverings."""
    rep = SuiteReport("sparse-difference", trials)
    dense_fired = descents_seen = 0
    for t, rng in enumerate(trial_rngs(seed, trials)):
        delta = Fraction(1, 8) if t % 2 == 0 else Fraction(1, 16)
        A, N = _sparse_instance(rng, delta)
        lifted = []
        res = sparse_diff_extract(A, N, delta, on_lift=lambda D, l: lifted.append((D, l)))
        label = f"trial {t} (N={N}, delta={delta})"
        s = sparse_s(delta)
        descents = len(res.steps("fiber-descend"))
        descents_seen += descents > 0
        if descents > max(s, 0):
            rep.failures.append(f"{label}: {descents} descents > s = {s}")
        _check_pairs(res, set(A), label, rep)
        if not check_regular(res.sequence, 2):
            rep.failures.append(f"{label}: not 2-regular")
        if len(res.steps("dense-branch")) != len(lifted):
            rep.failures.append(f"{label}: dense branch fired without reporting its lift")
        for D, l in lifted:
            dense_fired += 1
            counts: dict[int, int] = {}
            for d in D:
                counts[(d - D[0]) // l] = counts.get((d - D[0]) // l, 0) + 1
            k = (D[-1] - D[0]) // l + 1
            if len(counts) != k:
                rep.failures.append(f"{label}: lifted covering has empty intervals")
            if max(counts.values()) > 8:
                rep.failures.append(f"{label}: lifted occupancy {max(counts.values())} > 8")
    rep.summary = {"dense_branch": dense_fired, "with_descent": descents_seen}
    return rep


@_timed
def regular_to_convex_suite(trials: int = 200, seed: int = 0) -> SuiteReport:
    """convexify 2-regular inputs: strictly convex, length >= floor(sqrt(|B|)/4)."""
    rep = SuiteReport("regular-to-convex", trials)
    for t, rng in enumerate(trial_rngs(seed, trials)):
        X = int(rng.integers(1, 101))
        B = _random_regular(rng, X, int(rng.integers(1, 401)))
        res = regular_to_convex(B, regularity_witness(B, 2))
        if not check_convex(res.sequence) or not set(res.sequence) <= set(B):
            rep.failures.append(f"trial {t}: output not a convex subsequence")
        if len(res) < isqrt(len(B)) // 4:
            rep.failures.append(f"trial {t}: length {len(res)} < {isqrt(len(B)) // 4}")
    return rep


@_timed
def smaller_l(trials: int = 200, seed: int = 0) -> SuiteReport:
    """refine 2-regular inputs to (1 + 1/l)-regular subsets of size >= |A|/(4l+2)."""
    rep = SuiteReport("smaller-l", trials)
    for t, rng in enumerate(trial_rngs(seed, trials)):
        X = int(rng.integers(1, 101))
        A = _random_regular(rng, X, int(rng.integers(1, 401)))
        l = int(rng.integers(2, 6))
        res = refine_regularity(A, regularity_witness(A, 2), l)
        if not check_regular(res.sequence, 1 + Fraction(1, l)) or not set(res.sequence) <= set(A):
            rep.failures.append(f"trial {t}: output not a (1+1/{l})-regular subset")
        if len(res) * (4 * l + 2) < len(A):
            rep.failures.append(f"trial {t}: size {len(res)} < {len(A)}/{4 * l + 2}")
    return rep


@_timed
def ruzsa(trials: int = 200, seed: int = 0) -> SuiteReport:
    """|X| <= 2N/|A|, translates A + x disjoint, and [N] inside A - A + X."""
    rep = SuiteReport("ruzsa", trials)
    for t, rng in enumerate(trial_rngs(seed, trials)):
        N = int(rng.integers(1, 2001))
        size = max(1, int(N * rng.uniform(0.002, 1.0)))
        A = _random_subset(rng, 1, N, size)
        T = ruzsa_cover(A, N)
        X = list(T.translates)
        if len(X) * len(A) > 2 * N:
            rep.failures.append(f"trial {t}: |X| = {len(X)} > 2N/|A|")
        union = set()
        for x in X:
            union.update(a + x for a in A)
        if len(union) != len(X) * len(A):
            rep.failures.append(f"trial {t}: translates A + x overlap")
        D = {a - b for a in A for b in A}
        Xs = set(X)
        for n in range(1, N + 1):
            x = T.translate_for(n)
            if x not in Xs or n - x not in D:
                rep.failures.append(f"trial {t}: {n} not covered by A - A + X")
                break
    return rep


SUITES = {
    "oracle-equivalence": oracle_equivalence,
    "colouring": colouring,
    "colouring-construction": colouring_construction,
    "cantor": cantor,
    "difference-construction": difference_construction,
    "dense-difference": dense_difference,
    "sparse-difference": sparse_difference,
    "regular-to-convex": regular_to_convex_suite,
    "smaller-l": smaller_l,
    "ruzsa": ruzsa,
}
