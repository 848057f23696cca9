import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from venkov.errors import DimensionMismatch, NotPositiveDefinite, NotSymmetric
from venkov.exact import EchelonBasis, affine_dimension, det, ldl_decompose, rank, solve_linear, transpose


def leibniz_det(M):
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        p = Fraction(1)
        for i in range(n):
            p *= M[i][perm[i]]
        total += -p if inv % 2 else p
    return total


def minor_rank(M):
    """Largest k with a nonzero k x k minor."""
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    for k in range(min(m, n), 0, -1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                if leibniz_det([[M[i][j] for j in cols] for i in rows]):
                    return k
    return 0


small_ints = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=4, elements=small_ints):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[0, 0, 0], [0, 0, 0]]) == 0
    # vertex-edge incidence of a triangle graph
    inc = [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
    assert minor_rank(inc) == 2
    assert rank(inc) == 2


def test_rank_rational_entries():
    M = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert rank(M) == minor_rank(M) == 1


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(M):
    assert rank(M) == minor_rank(M)


@settings(max_examples=150, deadline=None)
@given(matrices(5, 5))
def test_rank_transpose(M):
    assert rank(M) == rank(transpose(M))


@settings(max_examples=100, deadline=None)
@given(matrices(5, 5), st.randoms(use_true_random=False), st.fractions(min_value=-5, max_value=5).filter(bool))
def test_rank_row_operations(M, rnd, scale):
    r = rank(M)
    rows = [list(row) for row in M]
    rnd.shuffle(rows)
    assert rank(rows) == r
    rows[0] = [scale * x for x in rows[0]]
    assert rank(rows) == r


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_det_matches_leibniz(M):
    assert det(M) == leibniz_det([[Fraction(x) for x in r] for r in M])


def test_echelon_membership():
    b = EchelonBasis()
    assert b.add([1, 1, 0])
    assert b.add([0, 1, 1])
    assert not b.add([1, 2, 1])
    assert [2, 3, 1] in b
    assert [0, 0, 1] not in b


def test_affine_dimension_examples():
    assert affine_dimension([(0, 0), (1, 0), (0, 1)]) == 2
    assert affine_dimension([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == 1
    e = [tuple(int(i == k) for i in range(5)) for k in range(5)]
    z = (0,) * 5

    def add(*vs):
        return tuple(sum(c) for c in zip(*vs))

    def neg(v):
        return tuple(-x for x in v)

    pts = [z, e[0], e[1], e[2], add(e[0], e[1]), add(e[0], e[1], neg(e[2]))]
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    assert minor_rank(diffs) == 3
    assert affine_dimension(pts) == 3


def test_affine_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        affine_dimension([(0, 0), (1, 0, 0)])


def test_ldl_examples():
    I5 = [[int(i == j) for j in range(5)] for i in range(5)]
    L, D = ldl_decompose(I5)
    assert L == I5 and D == [1] * 5
    L, D = ldl_decompose([[2, 1], [1, 2]])
    assert D == [2, Fraction(3, 2)]
    assert L[1][0] == Fraction(1, 2)
    with pytest.raises(NotPositiveDefinite):
        ldl_decompose([[1, 2], [2, 1]])
    with pytest.raises(NotSymmetric):
        ldl_decompose([[1, 2], [0, 1]])


def _spd(M):
    # M M^T + I is positive definite
    n = len(M)
    return [[sum(M[i][k] * M[j][k] for k in range(n)) + (i == j) for j in range(n)] for i in range(n)]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_ldl_reconstructs(M):
    Q = _spd(M)
    L, D = ldl_decompose(Q)
    n = len(Q)
    for i in range(n):
        assert L[i][i] == 1 and all(L[i][j] == 0 for j in range(i + 1, n))
        for j in range(n):
            assert sum(L[i][k] * D[k] * L[j][k] for k in range(n)) == Q[i][j]
    assert all(x > 0 for x in D)


def test_solve_examples():
    assert solve_linear([[1, 0], [0, 1]], [3, 5]) == [3, 5]
    assert solve_linear([[1, 1]], [2]) == [2, 0]
    assert solve_linear([[1], [1]], [0, 1]) is None
    with pytest.raises(DimensionMismatch):
        solve_linear([[1, 0]], [1, 2])


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4), st.lists(small_ints, min_size=4, max_size=4))
def test_solve_consistency(A, b):
    b = b[: len(A)]
    x = solve_linear(A, b)
    augmented = [list(r) + [y] for r, y in zip(A, b)]
    if x is None:
        assert rank(augmented) > rank(A)
    else:
        assert [sum(a * xi for a, xi in zip(r, x)) for r in A] == b
