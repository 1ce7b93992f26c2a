from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfloop.errors import FormatError, NotInvertible
from hopfloop.exactmat import Matrix, PrimeField, RATIONALS, field_from_name, invert, kron, rank, solve

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def rmatrix(rows, cols):
    return st.lists(st.lists(rationals, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        Matrix.from_rows
    )


def kron_oracle(a, b):
    # definition-level double loop, independent of the production indexing
    out = [[None] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            for k in range(b.rows):
                for l in range(b.cols):
                    out[i * b.rows + k][j * b.cols + l] = a[i, j] * b[k, l]
    return Matrix.from_rows(out)


def test_kron_identity_cases():
    i2 = Matrix.identity(2)
    assert kron(i2, i2) == Matrix.identity(4)
    m = Matrix.from_int_rows([[3, -1], [0, 7]])
    assert kron(Matrix.from_int_rows([[2]]), m) == m.scale(Fraction(2))


def test_kron_matches_definition_oracle():
    a = Matrix.from_rows([[Fraction(1, 2), Fraction(-3)], [Fraction(0), Fraction(5, 7)]])
    b = Matrix.from_rows([[Fraction(2, 3), Fraction(1)], [Fraction(-1, 5), Fraction(4)]])
    assert kron(a, b) == kron_oracle(a, b)


@settings(max_examples=40, deadline=None)
@given(rmatrix(2, 2), rmatrix(2, 3), rmatrix(3, 2))
def test_kron_associative(a, b, c):
    assert kron(a, kron(b, c)) == kron(kron(a, b), c)


def test_invert_identity_and_singular():
    assert invert(Matrix.identity(3)) == Matrix.identity(3)
    with pytest.raises(NotInvertible):
        invert(Matrix.from_int_rows([[1, 1], [1, 1]]))
    with pytest.raises(NotInvertible):
        invert(Matrix.zeros(2, 3))


@settings(max_examples=40, deadline=None)
@given(rmatrix(3, 3))
def test_invert_multiply_back(m):
    try:
        inv = invert(m)
    except NotInvertible:
        assert rank(m) < 3
        return
    eye = Matrix.identity(3)
    assert m @ inv == eye
    assert inv @ m == eye
    assert invert(inv) == m
    assert rank(m) == 3


def test_rank_cases():
    assert rank(Matrix.zeros(3, 5)) == 0
    assert rank(Matrix.identity(4)) == 4
    u = [Fraction(x) for x in (1, 2, -1, 3)]
    v = [Fraction(x) for x in (2, 0, 1, 5)]
    outer = Matrix.from_rows([[a * b for b in v] for a in u])
    assert rank(outer) == 1


@settings(max_examples=60, deadline=None)
@given(rationals, rationals)
def test_rational_arithmetic_exact(x, y):
    assert (x + y) - y == x


def test_solve_consistent_and_not():
    a = Matrix.from_int_rows([[1, 2], [2, 4]])
    b = Matrix.from_int_rows([[3], [6]])
    x = solve(a, b)
    assert x is not None and a @ x == b
    assert solve(a, Matrix.from_int_rows([[3], [7]])) is None


def test_prime_field_arithmetic():
    f5 = PrimeField(5)
    a, b = f5.from_int(3), f5.from_int(4)
    assert (a * b).val == 2
    assert (a / b).val == (3 * pow(4, -1, 5)) % 5
    assert f5.parse("7") == f5.from_int(2)
    assert f5.fmt(a) == "3"
    with pytest.raises(FormatError):
        PrimeField(6)
    m = Matrix.from_rows([[f5.from_int(1), f5.from_int(2)], [f5.from_int(3), f5.from_int(4)]], f5)
    inv = invert(m)
    assert m @ inv == Matrix.identity(2, f5)
    assert rank(m) == 2


def test_field_from_name():
    assert field_from_name("q") == RATIONALS
    assert field_from_name("fp:7") == PrimeField(7)
    with pytest.raises(FormatError):
        field_from_name("float")


def test_scalar_canonical_strings():
    f = RATIONALS
    assert f.fmt(Fraction(-3, 6)) == "-1/2"
    assert f.fmt(Fraction(4, 2)) == "2"
    assert f.parse("7/3") == Fraction(7, 3)
    with pytest.raises(FormatError):
        f.parse("x")
