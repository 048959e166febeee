from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bethe_yangian.series import (MatrixSeries, SeriesError, USeries, alternate_signs, invert,
                                  invert_matrix, matrix_reflect_shift, reflect_shift, shift)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def series(N=5, unital=False):
    return st.lists(fracs, min_size=N + 1, max_size=N + 1).map(
        lambda c: USeries([Fraction(1)] + c[1:] if unital else c))


def shift_by_products(S, a):
    """Oracle: substitute u -> u - a by multiplying geometric series."""
    N = S.N
    geo = USeries([Fraction(0)] + [Fraction(a) ** p for p in range(N)])
    out = USeries.constant(S[0], N)
    power = USeries.one(N)
    for r in range(1, N + 1):
        power = power * geo
        out = out + S[r] * power
    return out


def test_examples():
    S = USeries([1, 2, 0, 0])
    assert shift(S, 1) == USeries([1, 2, 2, 2])
    assert alternate_signs(USeries([1, 1, 1])) == USeries([1, -1, 1])
    assert invert(USeries([1, 1, 0, 0])) == USeries([1, -1, 1, -1])
    assert str(USeries([1, 0, Fraction(1, 2)])) == "(1) + (1/2) u^-2 [trunc 2]"


def test_truncation_is_minimum():
    a, b = USeries([1, 1, 1]), USeries([1, 1])
    assert (a * b).N == 1 and (a + b).N == 1


def test_invert_requires_unit():
    with pytest.raises(SeriesError):
        invert(USeries([2, 1]))


@settings(max_examples=50, deadline=None)
@given(series(), fracs)
def test_shift_against_products(S, a):
    assert shift(S, a) == shift_by_products(S, a)


@settings(max_examples=50, deadline=None)
@given(series(), fracs, fracs)
def test_shift_composes(S, a, b):
    assert shift(shift(S, a), b) == shift(S, a + b)


@settings(max_examples=50, deadline=None)
@given(series(), st.integers(1, 4))
def test_reflect_shift_is_involution(S, n):
    assert reflect_shift(reflect_shift(S, n), n) == S


@settings(max_examples=50, deadline=None)
@given(series(unital=True))
def test_inverse_two_sided(S):
    one = USeries.one(S.N)
    Si = invert(S)
    assert S * Si == one and Si * S == one


def matrix_series(n=2, N=3):
    mats = st.lists(st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n),
                    min_size=N, max_size=N)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return mats.map(lambda ms: MatrixSeries.from_coefficient_matrices([eye] + ms))


@settings(max_examples=30, deadline=None)
@given(matrix_series())
def test_matrix_inverse(M):
    inv = invert_matrix(M)
    ident = MatrixSeries.identity(M.size, M.N)
    assert M * inv == ident and inv * M == ident
    assert M.is_unital()


@settings(max_examples=20, deadline=None)
@given(matrix_series(), st.integers(1, 3))
def test_matrix_reflect_involution(M, n):
    assert matrix_reflect_shift(matrix_reflect_shift(M, n), n) == M


def test_entry_indexing():
    M = MatrixSeries.from_coefficient_matrices([[[1, 0], [0, 1]], [[0, 5], [0, 0]]])
    assert M.entry(1, 2) == USeries([0, 5])
    assert M.coefficient_matrix(1) == [[0, 5], [0, 0]]
