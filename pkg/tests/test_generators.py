from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from posbasis.cone import is_pli, is_positive_basis
from posbasis.errors import DimensionTooSmall, DuplicateParameter, InvalidScalar
from posbasis.generators import (
    CircleParam,
    gen_binomial,
    gen_circle_lift,
    gen_maximal_basis,
    gen_minimal_basis,
    rational_circle_point,
)
from posbasis.lp import FeasibilityProblem
from posbasis.numerics import VecSet, vec
from posbasis.oracle import oracle_membership

from strategies import rationals


def test_minimal_examples():
    assert gen_minimal_basis(1) == VecSet(1, (vec(1), vec(-1)))
    assert gen_minimal_basis(2) == VecSet(2, (vec(1, 0), vec(0, 1), vec(-1, -1)))
    vs = gen_minimal_basis(3)
    assert len(vs) == 4 and is_positive_basis(vs)[0]
    for i in range(4):
        assert not oracle_membership(FeasibilityProblem(vs.without(i), vs[i]))


def test_maximal_examples():
    assert gen_maximal_basis(1) == VecSet(1, (vec(1), vec(-1)))
    assert gen_maximal_basis(2) == VecSet(2, (vec(1, 0), vec(0, 1), vec(-1, 0), vec(0, -1)))
    vs = gen_maximal_basis(3)
    assert len(vs) == 6 and is_positive_basis(vs)[0]


@pytest.mark.parametrize("n", range(1, 5))
def test_bases_tight_at_both_ends(n):
    lo, hi = gen_minimal_basis(n), gen_maximal_basis(n)
    assert (len(lo), len(hi)) == (n + 1, 2 * n)
    assert is_positive_basis(lo)[0] and is_positive_basis(hi)[0]


def test_binomial_examples():
    assert gen_binomial(2) == VecSet(2, (vec(1, 0), vec(0, 1)))
    vs = gen_binomial(4)
    assert len(vs) == 6 and is_pli(vs)[0]
    assert vs[0] == vec(1, 1, 0, 0) and vs[-1] == vec(0, 0, 1, 1)
    vs6 = gen_binomial(6)
    assert len(vs6) == 20 and is_pli(vs6)[0]


@pytest.mark.parametrize("n", range(2, 8))
def test_binomial_structure(n):
    vs = gen_binomial(n)
    assert len(vs) == comb(n, n // 2)
    assert all(sum(v) == n // 2 for v in vs)
    assert len(set(vs)) == len(vs)
    rows = [tuple(v) for v in vs]
    assert rows == sorted(rows, reverse=True)
    if n == 5:
        assert len(vs) == 2 * n
    if n >= 6:
        assert len(vs) > 2 * n


def test_binomial_needs_n_at_least_2():
    with pytest.raises(DimensionTooSmall):
        gen_binomial(1)


def test_circle_point_examples():
    assert rational_circle_point(CircleParam(0)) == vec(1, 0)
    assert rational_circle_point(CircleParam(1)) == vec(0, 1)
    x, y = rational_circle_point(CircleParam(2))
    assert (x, y) == (Fraction(-3, 5), Fraction(4, 5))
    assert x * x + y * y == 1


def test_circle_param_nonnegative():
    with pytest.raises(InvalidScalar):
        CircleParam(-1)


@given(st.lists(rationals(max_num=30, max_den=7, positive=False).map(abs), min_size=1, max_size=12, unique=True))
def test_circle_points_exact_and_distinct(ts):
    pts = [rational_circle_point(CircleParam(t)) for t in ts]
    assert all(x * x + y * y == 1 for x, y in pts)
    assert len(set(pts)) == len(pts)


def test_circle_lift_examples():
    vs = gen_circle_lift(3, 3, [0, 1, 2])
    assert vs == VecSet(3, (vec(1, 0, 1), vec(0, 1, 1), vec("-3/5", "4/5", 1)))
    for i in range(3):
        assert not oracle_membership(FeasibilityProblem(vs.without(i), vs[i]))
    assert is_pli(vs)[0]
    assert is_pli(gen_circle_lift(1, 3, [0]))[0]


def test_circle_lift_padding():
    vs = gen_circle_lift(4, 5)
    assert vs.dim == 5
    assert all(v[3] == 0 and v[4] == 0 and v[2] == 1 for v in vs)
    assert is_pli(vs)[0]


def test_circle_lift_errors():
    with pytest.raises(DuplicateParameter):
        gen_circle_lift(2, 3, [1, 1])
    with pytest.raises(DimensionTooSmall):
        gen_circle_lift(2, 2)


@given(st.lists(rationals(max_num=20, max_den=5).map(abs), min_size=2, max_size=12, unique=True),
       st.integers(3, 5))
@settings(max_examples=60)
def test_circle_lift_always_pli(ts, n):
    vs = gen_circle_lift(len(ts), n, ts)
    ok, report = is_pli(vs)
    assert ok and report.all_witnesses_verify()
