import pytest

from regseq.constructions import (
    build_cantor,
    build_colouring,
    build_density_example,
    build_difference_example,
    check_cantor_structure,
)
from regseq.core import InvalidParameter, SeqOverflowError, difference_set
from regseq.solvers import exact_convex, exact_r_l


def cantor_by_removal(k, K):
    """Level sets rebuilt point by point: split each maximal run into N_i-blocks, drop every K-th."""
    N = (K - 1) * (2 * K) ** k
    levels = [set(range(1, N + 1))]
    for i in range(1, k + 1):
        Ni = (2 * K) ** (k - i)
        prev = sorted(levels[-1])
        keep = set()
        run_start = prev[0]
        for a, b in zip(prev, prev[1:] + [None]):
            if b is None or b != a + 1:
                keep.update(p for p in range(run_start, a + 1) if ((p - run_start) // Ni) % K)
                run_start = b
        levels.append(keep)
    return levels


def test_colouring_examples():
    assert build_colouring(1, 5).colours.tolist() == [1] * 5
    assert build_colouring(2, 3).colours.tolist() == [1, 1, 1, 2, 2, 2, 1, 1, 1]


def test_colouring_three_levels():
    c = build_colouring(3, 3)
    # blocks of 9 avoid colours 3, 1, 2 in turn; inside, blocks of 3 follow the sub-palette
    assert c.colours.tolist()[:9] == [1, 1, 1, 2, 2, 2, 1, 1, 1]
    assert c.colours.tolist()[9:18] == [2, 2, 2, 3, 3, 3, 2, 2, 2]
    assert c.colours.tolist()[18:27] == [1, 1, 1, 3, 3, 3, 1, 1, 1]


@pytest.mark.parametrize("r, M", [(2, 12), (3, 3), (3, 4), (3, 5)])
def test_colouring_sharpness(r, M):
    from math import factorial

    c = build_colouring(r, M)
    for cls in c.classes():
        if cls:
            assert exact_r_l(cls, 2).length <= 2 * factorial(r - 1) * M
            assert exact_convex(cls).length <= factorial(r) * M


def test_colouring_errors():
    with pytest.raises(InvalidParameter):
        build_colouring(2, 1)
    with pytest.raises(SeqOverflowError):
        build_colouring(64, 2)


def test_cantor_examples():
    assert build_cantor(1, 2).final == (2, 4)
    cs = build_cantor(2, 2)
    assert cs.N == 16
    assert cs.level_set(1) == (5, 6, 7, 8, 13, 14, 15, 16)
    assert cs.final == (6, 8, 14, 16)
    cs = build_cantor(2, 4)
    assert cs.N == 192 and len(cs.final) == 108
    assert cs.levels[2].length == 3


@pytest.mark.parametrize("k, K", [(1, 2), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (2, 5), (4, 2)])
def test_cantor_matches_pointwise_removal(k, K):
    cs = build_cantor(k, K)
    for i, expected in enumerate(cantor_by_removal(k, K)):
        assert set(cs.level_set(i)) == expected
        assert not check_cantor_structure(cs)


def test_cantor_structure_detects_damage():
    import numpy as np
    from dataclasses import replace

    cs = build_cantor(2, 3)
    bad = replace(cs.levels[2], starts=np.append(cs.levels[2].starts[:-1], cs.N + 5))
    broken = replace(cs, levels=cs.levels[:2] + (bad,))
    assert check_cantor_structure(broken)


def test_cantor_sizes_are_exact():
    for k in range(1, 4):
        for K in range(2, 6):
            cs = build_cantor(k, K)
            assert cs.levels[-1].size * K**k == cs.N * (K - 1) ** k


def test_density_example():
    assert build_density_example(1) == (2, 4)
    A = build_density_example(2)
    assert len(A) == 108 and 2 * len(A) >= 192
    assert exact_r_l(A, 2).length <= 16 * 2**2
    assert exact_convex(A).length <= 24 * 2**3
    for k in range(1, 5):
        N = (2 * k - 1) * (4 * k) ** k
        assert 2 * build_cantor(k, 2 * k).levels[-1].size >= N


def test_difference_example():
    assert build_difference_example(1) == (1,)
    assert build_difference_example(2) == (1, 17)
    assert build_difference_example(3) == (1, 17, 257, 273)
    D = difference_set(build_difference_example(3))
    assert len(D) == 9
    assert exact_r_l(D, 2).length <= 3
    for n in range(1, 12):
        A = build_difference_example(n)
        assert len(A) == 2 ** (n - 1) and A[-1] <= 2 * 16 ** (n - 1)
        assert set(A) < set(build_difference_example(n + 1))
    with pytest.raises(SeqOverflowError):
        build_difference_example(16)
