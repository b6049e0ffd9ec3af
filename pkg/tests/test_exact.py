from fractions import Fraction

from mcluster.exact import (
    Matrix,
    kernel_basis,
    rank_of,
    row_space_basis,
    rref,
    solve,
)


def test_kernel_identity_is_empty():
    assert kernel_basis(Matrix.identity(2).entries, 2) == []


def test_kernel_zero_matrix_is_standard_basis():
    vecs = kernel_basis(Matrix.zero(2, 3).entries, 3)
    assert vecs == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_kernel_rank_one():
    vecs = kernel_basis([[1, 1]], 2)
    assert vecs == [(Fraction(-1), Fraction(1))]


def test_rref_pivots():
    reduced, pivots = rref([[2, 4], [1, 2]])
    assert pivots == [0]
    assert reduced[0] == [Fraction(1), Fraction(2)]


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 0], [0, 2]], [3, 4]) == (Fraction(3), Fraction(2))
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_matrix_inverse_round_trip():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    assert m * m.inverse() == Matrix.identity(2)


def test_rank_and_row_space():
    assert rank_of([[1, 2], [2, 4], [0, 1]]) == 2
    basis = row_space_basis([[2, 4], [1, 3]])
    assert basis == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
