import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlehh.linalg import rank_mod_p, rank_rational


def det_cofactor(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det_cofactor([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


def rank_by_minors(m, p=None):
    # largest k with a nonzero k x k minor
    from itertools import combinations

    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                d = det_cofactor([[m[r][c] for c in cs] for r in rs])
                if (d % p if p else d):
                    return k
    return 0


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_examples():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rank_rational(eye) == 3
    assert rank_rational([[1, 1], [1, 1]]) == 1
    assert rank_rational([[1, -1], [-1, 1]]) == 1
    assert rank_mod_p([[2]], 2) == 0
    assert rank_mod_p([[1, 1], [1, -1]], 2) == 1
    assert rank_mod_p(eye, 3) == 3


def test_empty_and_zero():
    assert rank_rational([]) == 0
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_mod_p([[0]], 5) == 0


def test_rejects_composite():
    with pytest.raises(ValueError):
        rank_mod_p([[1]], 4)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_rational_matches_minors(m):
    assert rank_rational(m) == rank_by_minors(m)


@settings(max_examples=200, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_mod_p_matches_minors(m, p):
    assert rank_mod_p(m, p) == rank_by_minors(m, p)


@settings(max_examples=200, deadline=None)
@given(matrices, st.sampled_from([2, 3, 7]))
def test_mod_p_bounded_by_rational(m, p):
    assert rank_mod_p(m, p) <= rank_rational(m)


@settings(max_examples=100, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_permutation_and_transpose_invariance(m, rnd):
    rows = m[:]
    rnd.shuffle(rows)
    perm = list(range(len(m[0])))
    rnd.shuffle(perm)
    shuffled = [[r[j] for j in perm] for r in rows]
    transposed = [list(c) for c in zip(*m)]
    r = rank_rational(m)
    assert rank_rational(shuffled) == r == rank_rational(transposed)
    assert rank_mod_p(shuffled, 2) == rank_mod_p(m, 2) == rank_mod_p(transposed, 2)


def test_larger_low_rank_product():
    # 30 x 30 of rank 7, built as a product, exercises Bareiss growth
    rng = random.Random(3)
    a = [[rng.randint(-2, 2) for _ in range(7)] for _ in range(30)]
    b = [[rng.randint(-2, 2) for _ in range(30)] for _ in range(7)]
    m = [[sum(a[i][k] * b[k][j] for k in range(7)) for j in range(30)] for i in range(30)]
    assert rank_rational(m) == rank_over_fractions(m) <= 7


def rank_over_fractions(m):
    from fractions import Fraction

    rows = [[Fraction(x) for x in r] for r in m]
    rank = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
