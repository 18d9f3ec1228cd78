from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from posbasis.errors import DimensionMismatch, InvalidScalar
from posbasis.numerics import (
    Matrix,
    VecSet,
    primitive_integer,
    rank,
    rat,
    scale,
    vec,
)

from strategies import rationals


def test_rat_reduces():
    r = rat(2, 4)
    assert (r.numerator, r.denominator) == (1, 2)


def test_rat_sign_on_numerator():
    r = rat(3, -6)
    assert (r.numerator, r.denominator) == (-1, 2)


def test_rat_zero_canonical():
    r = rat(0, 7)
    assert (r.numerator, r.denominator) == (0, 1)


def test_rat_zero_denominator():
    with pytest.raises(InvalidScalar):
        rat(1, 0)


def test_vec_refuses_floats():
    with pytest.raises(InvalidScalar):
        vec(0.5, 1)


def test_vec_accepts_fraction_strings():
    assert vec("-3/5", 1).coords == (Fraction(-3, 5), Fraction(1))


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], 2),
        ([[1, 0], [0, 1], [-1, -1]], 2),
        ([[1, 2], [2, 4]], 1),
        ([[0, 0], [0, 0]], 0),
    ],
)
def test_rank_examples(rows, expected):
    assert rank(Matrix.from_rows(rows)) == expected


def test_scale_examples():
    assert scale(vec(1, 0), 3) == vec(3, 0)
    assert scale(vec(2, 4), Fraction(1, 2)) == vec(1, 2)
    assert scale(vec(1, 1), 0) == vec(0, 0)


def test_primitive_integer():
    assert primitive_integer(vec(Fraction(2, 3), Fraction(-4, 9))) == vec(3, -2)
    assert primitive_integer(vec(0, 0)) == vec(0, 0)


def test_vecset_dimension_checks():
    with pytest.raises(DimensionMismatch):
        VecSet(2, (vec(1, 0), vec(1, 0, 0)))
    with pytest.raises(DimensionMismatch):
        VecSet.from_rows([])


@given(rationals(), rationals(), rationals())
def test_field_laws_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    for x in ((a + b) + c, a * (b + c)):
        assert x.denominator > 0


matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(
        st.lists(rationals(max_num=4, max_den=3), min_size=cols, max_size=cols),
        min_size=1,
        max_size=5,
    )
)


@given(matrices)
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert rank(Matrix.from_rows(rows)) == expected


@given(matrices, st.randoms(use_true_random=False), rationals(nonzero=True))
def test_rank_invariances(rows, rnd, c):
    r = rank(Matrix.from_rows(rows))
    assert r <= min(len(rows), len(rows[0]))
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    assert rank(Matrix.from_rows(shuffled)) == r
    i = rnd.randrange(len(rows))
    scaled = [row[:] for row in rows]
    scaled[i] = [c * x for x in scaled[i]]
    assert rank(Matrix.from_rows(scaled)) == r
