import itertools
import random

from palindroma import linalg


def mat_vec(rows, x):
    return [sum(a * b for a, b in zip(row, x)) for row in rows]


def test_kernel_basis_simple():
    rows = [[1, -1, 0]]
    basis = linalg.kernel_basis(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(rows, v) == [0]


def test_kernel_basis_full_rank_matrix_has_trivial_kernel():
    rows = [[1, 0], [0, 1]]
    assert linalg.kernel_basis(rows, 2) == []


def test_kernel_basis_zero_matrix():
    rows = [[0, 0, 0]]
    basis = linalg.kernel_basis(rows, 3)
    assert len(basis) == 3


def test_kernel_basis_is_saturated():
    # kernel of [2 -2] over Z is generated by (1, 1), not (2, 2)
    basis = linalg.kernel_basis([[2, -2]], 2)
    assert len(basis) == 1
    v = basis[0]
    assert sorted(map(abs, v)) == [1, 1]


def test_kernel_basis_random_consistency():
    rng = random.Random(99)
    for _ in range(25):
        m, n = rng.randrange(1, 4), rng.randrange(1, 5)
        rows = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(m)]
        basis = linalg.kernel_basis(rows, n)
        for v in basis:
            assert mat_vec(rows, v) == [0] * m
        # rank-nullity: kernel dimension + row rank = number of columns
        assert len(basis) == n - len(linalg.hnf_rows(rows))


def test_hnf_rows_pivots_positive_and_reduced():
    basis = linalg.hnf_rows([[2, 4], [0, 3]])
    assert basis == [[2, 1], [0, 3]]
    for i, row in enumerate(basis):
        pivot = next(x for x in row if x != 0)
        assert pivot > 0


def test_hnf_rows_drops_zero_rows_and_is_canonical():
    a = linalg.hnf_rows([[1, 2], [2, 4], [0, 0]])
    assert a == [[1, 2]]
    # different generating sets of the same lattice agree
    b = linalg.hnf_rows([[3, 6], [1, 2]])
    assert a == b


def test_hnf_rows_empty():
    assert linalg.hnf_rows([]) == []


def test_bounded_lattice_points_matches_brute_force():
    basis = [[1, 0, 2], [0, 2, 1]]
    bound = 3
    got = sorted(tuple(p) for p in linalg.bounded_lattice_points(basis, bound))
    expected = set()
    for c1, c2 in itertools.product(range(-12, 13), repeat=2):
        p = tuple(c1 * a + c2 * b for a, b in zip(basis[0], basis[1]))
        if all(-bound <= x <= bound for x in p):
            expected.add(p)
    assert got == sorted(expected)


def test_bounded_lattice_points_include_zero_flag():
    basis = [[1, 1]]
    with_zero = list(linalg.bounded_lattice_points(basis, 1, include_zero=True))
    without = list(linalg.bounded_lattice_points(basis, 1, include_zero=False))
    assert [0, 0] in with_zero
    assert [0, 0] not in without
    assert len(with_zero) == len(without) + 1


def test_bounded_lattice_points_empty_basis():
    assert list(linalg.bounded_lattice_points([], 2)) == [[]]
