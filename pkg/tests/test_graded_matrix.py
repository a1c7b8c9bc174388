import random

import pytest

from gradedmod.errors import DegreeOrderError, GradednessError, UsageError
from gradedmod.graded_matrix import (
    GradedMatrix,
    canonical_from_scaled,
    column_axpy,
    is_reduced,
    low,
    row_axpy,
    validate,
)
from gradedmod.graded_poly import HomogeneousTerm as H
from gradedmod.reduction import quotient_signature, random_graded_matrix, reduce

from conftest import ALL_FIELDS, GF2, GF3, QQ, gm

T = lambda d, c=1, F=GF2: H(F(c), d)  # noqa: E731


def assert_graded(A):
    for j, n in enumerate(A.row_degrees):
        for k, m in enumerate(A.col_degrees):
            a = A.entries[j][k]
            assert not a or m == n + a.degree


def test_validate_running_example(running_example):
    A = validate(GF2, [0, 1], [1, 2], [[T(1), T(2)], [T(0), T(1)]])
    assert A == running_example


def test_gradedness_error_names_entry():
    with pytest.raises(GradednessError) as err:
        validate(GF2, [0], [0], [[T(1)]])
    assert (err.value.row, err.value.col) == (1, 1)
    assert "(1,1)" in str(err.value)


def test_degree_order_error():
    with pytest.raises(DegreeOrderError):
        validate(GF2, [1, 0], [], [[], []])
    with pytest.raises(DegreeOrderError):
        validate(GF2, [], [3, 2], [])


def test_low():
    A = gm(GF2, [0, 1], [1, 2, 3], [(1, 1, 1, 1), (2, 1, 1, 0), (1, 3, 1, 3)])
    assert low(A, 1) == 2
    assert low(A, 2) == 0
    assert low(A, 3) == 1
    with pytest.raises(UsageError):
        low(A, 4)
    with pytest.raises(UsageError):
        low(A, 0)


def test_is_reduced(running_example):
    assert is_reduced(gm(GF2, [0, 1], [1, 2], [(1, 1, 1, 1), (2, 1, 1, 0)]))
    assert not is_reduced(running_example)
    assert is_reduced(GradedMatrix(GF2, [], []))


def test_column_axpy(running_example):
    out = column_axpy(running_example, 2, 1, T(1))
    assert out == gm(GF2, [0, 1], [1, 2], [(1, 1, 1, 1), (2, 1, 1, 0)])
    assert running_example.entry(1, 2) == T(2)  # input untouched
    assert column_axpy(running_example, 2, 1, H.zero(GF2)) == running_example
    with pytest.raises(GradednessError):
        column_axpy(running_example, 2, 1, T(2))
    with pytest.raises(UsageError):
        column_axpy(running_example, 1, 1, T(0))


def test_row_axpy():
    # column (T^2, T)^T with n = (0, 1), m = (2): row 1 -= T * row 2 clears the top
    A = gm(GF2, [0, 1], [2], [(1, 1, 1, 2), (2, 1, 1, 1)])
    out = row_axpy(A, 1, 2, T(1))
    assert out == gm(GF2, [0, 1], [2], [(2, 1, 1, 1)])
    assert row_axpy(A, 1, 2, H.zero(GF2)) == A
    with pytest.raises(GradednessError):
        row_axpy(A, 1, 2, T(0))
    with pytest.raises(GradednessError):
        row_axpy(A, 2, 1, T(1))  # would need degree -1


def test_sign_conventions_over_q():
    A = gm(QQ, [0, 0], [1], [(1, 1, 2, 1), (2, 1, 3, 1)])
    out = row_axpy(A, 1, 2, H(QQ.parse("2/3"), 0))
    assert out.entry(1, 1) == H.zero(QQ)
    out = column_axpy(gm(QQ, [0], [1, 1], [(1, 1, 2, 1), (1, 2, 5, 1)]), 2, 1, H(QQ.parse("5/2"), 0))
    assert out.entry(1, 2) == H.zero(QQ)


@pytest.mark.parametrize("seed", range(20))
def test_operations_preserve_gradedness(seed):
    rng = random.Random(seed)
    F = ALL_FIELDS[seed % 4]
    A = random_graded_matrix(F, rng, min_rows=2, min_cols=2)
    for _ in range(30):
        k, kp = rng.sample(range(1, A.ncols + 1), 2)
        if A.col_degrees[kp - 1] <= A.col_degrees[k - 1]:
            A = column_axpy(A, k, kp, H(F.random_element(rng, True), A.col_degrees[k - 1] - A.col_degrees[kp - 1]))
        j, jp = rng.sample(range(1, A.nrows + 1), 2)
        if A.row_degrees[jp - 1] >= A.row_degrees[j - 1]:
            A = row_axpy(A, j, jp, H(F.random_element(rng, True), A.row_degrees[jp - 1] - A.row_degrees[j - 1]))
        assert_graded(A)


@pytest.mark.parametrize("seed", range(20))
def test_low_does_not_grow_after_pivot_elimination(seed):
    rng = random.Random(100 + seed)
    F = GF3
    for _ in range(20):
        A = random_graded_matrix(F, rng, min_rows=1, min_cols=2)
        lows = A.lows()
        for k in range(1, A.ncols + 1):
            for kp in range(1, k):
                ell = lows[k - 1]
                if ell and lows[kp - 1] == ell:
                    c = A.entry(ell, k) / A.entry(ell, kp)
                    assert low(column_axpy(A, k, kp, c), k) < ell


@pytest.mark.parametrize("seed", range(10))
def test_entry_degrees_monotone(seed):
    A = random_graded_matrix(GF2, random.Random(seed), density=0.9)
    for j in range(A.nrows):
        degs = [a.degree for a in A.entries[j] if a]
        assert degs == sorted(degs)
    for k in range(A.ncols):
        degs = [A.entries[j][k].degree for j in range(A.nrows) if A.entries[j][k]]
        assert degs == sorted(degs, reverse=True)


def test_matmul_and_identity(running_example):
    I = GradedMatrix.identity(GF2, running_example.col_degrees)
    assert running_example @ I == running_example
    with pytest.raises(UsageError):
        running_example @ running_example


def test_scaled_grading_reduces_to_canonical():
    # deg T = 3: n = (0, 3), m = (3, 6); entries are exponents of T
    entries = [[T(1, F=QQ), T(2, F=QQ)], [T(0, F=QQ), T(1, F=QQ)]]
    A = canonical_from_scaled(QQ, [0, 3], [3, 6], entries, 3)
    assert A.row_degrees == (0, 1) and A.col_degrees == (1, 2)
    sig = quotient_signature(reduce(A).reduced)
    assert sig.summands == ((0, float("inf")),)
    with pytest.raises(UsageError):
        canonical_from_scaled(QQ, [0, 2], [3, 6], entries, 3)


def test_json_round_trip(running_example):
    obj = running_example.to_json()
    assert obj["entries"] == [[1, 1, "1", 1], [1, 2, "1", 2], [2, 1, "1", 0], [2, 2, "1", 1]]
    assert GradedMatrix.from_json(obj) == running_example
