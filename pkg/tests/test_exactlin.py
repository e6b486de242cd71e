import random
from fractions import Fraction

import pytest

from semidual.exactlin import (DimensionMismatchError, Matrix, NonSquareError,
                               det, rank, solve)

from oracles import cofactor_det, gauss_rank, minor_rank


def mat(rows):
    return Matrix.from_rows(rows)


def test_det_2x2_formula():
    assert det(mat([[1, 2], [3, 4]])) == -2


def test_det_identity():
    for n in range(5):
        assert det(Matrix.identity(n)) == 1


def test_det_step_pattern_2x2():
    # first row (a11, a12) = (1, 2): det = a11 a12 - a12^2 = -2
    assert det(mat([[1, 2], [2, 2]])) == -2


def test_rank_identity_and_ones():
    assert rank(Matrix.identity(2)) == 2
    assert rank(mat([[1, 1], [1, 1]])) == 1


def test_rank_step_pattern_3x3():
    rows = [[2, 1, 3], [1, 1, 3], [3, 3, 3]]
    assert cofactor_det(rows) == -6  # oracle: the matrix is nonsingular
    assert rank(mat(rows)) == 3


def test_solve_identity():
    b = [Fraction(3), Fraction(-1, 2)]
    assert solve(Matrix.identity(2), b) == tuple(b)


def test_solve_hand_checked():
    assert solve(mat([[1, 1], [1, 0]]), [3, 1]) == (Fraction(1), Fraction(2))


def test_solve_generation_system():
    # coefficient matrix of the two-value generation system with values (1, 2)
    x = solve(mat([[1, 2], [2, 2]]), [2, 2])
    assert x == (Fraction(0), Fraction(1))
    assert [1 * x[0] + 2 * x[1], 2 * x[0] + 2 * x[1]] == [2, 2]


def test_solve_singular_returns_none():
    assert solve(mat([[1, 1], [1, 1]]), [1, 2]) is None
    assert solve(mat([[1, 1], [1, 1]]), [1, 1]) is None


def test_det_rejects_non_square():
    with pytest.raises(NonSquareError):
        det(mat([[1, 2, 3], [4, 5, 6]]))


def test_solve_rejects_bad_shapes():
    with pytest.raises(NonSquareError):
        solve(mat([[1, 2, 3], [4, 5, 6]]), [1, 2])
    with pytest.raises(DimensionMismatchError):
        solve(Matrix.identity(2), [1, 2, 3])


def _random_matrix(rng, rows, cols):
    return mat([[Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
                 for _ in range(cols)] for _ in range(rows)])


def test_det_multiplicative_property():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = _random_matrix(rng, n, n)
        b = _random_matrix(rng, n, n)
        assert det(a.matmul(b)) == det(a) * det(b)


def test_rank_transpose_property():
    rng = random.Random(102)
    for _ in range(40):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank(m) == rank(m.transpose())


def test_rank_against_minor_oracle():
    rng = random.Random(103)
    for _ in range(25):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(c)] for _ in range(r)]
        assert rank(mat(rows)) == minor_rank(rows)


def test_rank_against_gauss_oracle():
    # the fraction-free elimination skips zero columns; make sure the exact
    # division property survives sparse, low-rank, and fractional inputs
    rng = random.Random(107)
    for trial in range(300):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        style = trial % 3
        if style == 0:
            rows = [[Fraction(rng.choice([0, 0, 0, 1, -1, 2])) for _ in range(n)]
                    for _ in range(m)]
        elif style == 1:
            k = rng.randint(1, 3)
            u = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(m)]
            w = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
            rows = [[Fraction(sum(u[i][t] * w[t][j] for t in range(k)))
                     for j in range(n)] for i in range(m)]
        else:
            rows = [[Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3, 4]))
                     for _ in range(n)] for _ in range(m)]
        assert rank(mat(rows)) == gauss_rank(rows)


def test_det_against_cofactor_oracle():
    rng = random.Random(104)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n)
        assert det(m) == cofactor_det(m.row_lists())


def test_solve_postconditions():
    rng = random.Random(105)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n)
        b = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        x = solve(m, b)
        if x is None:
            assert det(m) == 0
        else:
            assert list(m.apply(x)) == b
