"""Tests for exact rational linear algebra."""

import random
from fractions import Fraction

import pytest

from wdp_delta.errors import DimensionMismatch, SingularMatrix
from wdp_delta.exact import (
    determinant,
    identity,
    is_negative_definite,
    leading_minors,
    mat_vec,
    matrix,
    rat_str,
    solve_linear,
    to_rat,
)

from .conftest import rats


def test_to_rat_accepts_exact_values():
    assert to_rat("3/6") == Fraction(1, 2)
    assert to_rat(4) == Fraction(4)
    assert to_rat(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize("value", [0.5, True])
def test_to_rat_rejects_inexact_values(value):
    with pytest.raises(TypeError):
        to_rat(value)


def test_rat_str_keeps_denominator():
    assert rat_str(2) == "2/1"
    assert rat_str(Fraction(-15, 17)) == "-15/17"


def test_solve_one_by_one():
    assert solve_linear(matrix([[-2]]), rats("-1/2")) == rats("1/4")


def test_solve_identity():
    assert solve_linear(identity(3), rats(2, -1, "5/3")) == rats(2, -1, "5/3")


def test_solve_support_of_f_on_first_quintic():
    # Gram({F}) = [[-2]] with right-hand side (-K - u E1).F = -u at u = 1/2.
    assert solve_linear(matrix([[-2]]), rats("-1/2")) == rats("1/4")


def test_solve_needs_row_exchange():
    assert solve_linear(matrix([[0, 1], [1, 0]]), rats(3, 5)) == rats(5, 3)


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve_linear(matrix([[1, 2], [2, 4]]), rats(1, 2))


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear(identity(2), rats(1, 2, 3))


def test_solve_random_systems():
    rng = random.Random(20240131)
    for _ in range(50):
        size = rng.randint(1, 5)
        mat = matrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(size)] for _ in range(size)])
        if determinant(mat) == 0:
            continue
        rhs = rats(*(rng.randint(-9, 9) for _ in range(size)))
        assert mat_vec(mat, solve_linear(mat, rhs)) == rhs


def test_determinant():
    assert determinant(matrix([[-2, 1], [1, -2]])) == 3
    assert determinant(matrix([[0, 1], [1, 0]])) == -1
    assert determinant(matrix([["1/2", 0], [0, 4]])) == 2
    assert determinant(()) == 1


@pytest.mark.parametrize(
    "mat, expected",
    [
        ([[-2]], True),
        ([[-2, 1], [1, -2]], True),
        ([[0]], False),
        ([[-1, 1], [1, -1]], False),
        ([[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]], True),
        ([], True),
    ],
)
def test_is_negative_definite(mat, expected):
    assert is_negative_definite(matrix(mat)) is expected


def test_leading_minors_stop_at_zero():
    assert leading_minors(matrix([[-2, 1], [1, -2]])) == (-2, 3)
    assert leading_minors(matrix([[0, 1], [1, 0]])) == (0,)


@pytest.mark.parametrize(
    "mat",
    [
        [[-2, 1, 0], [1, -2, 2], [0, 2, -2]],
        [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
        [[-2, 1, 1], [1, -2, 1], [1, 1, -2]],
    ],
)
def test_three_by_three_blocks_that_are_not_negative_definite(mat):
    assert is_negative_definite(matrix(mat)) is False
