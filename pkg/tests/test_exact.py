import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eoptd.errors import InvalidArgument, SingularityError
from eoptd.exact import (Surd, det_bareiss, fmt, inv_sqrt, psd_nullity, rank_exact,
                         solve_exact, sqrt_exact, to_exact)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10])


def test_sqrt_exact_perfect_squares_stay_rational():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_exact(0) == 0
    assert isinstance(sqrt_exact(Fraction(9, 4)), Fraction)


def test_sqrt_exact_irrational_is_normalized():
    r = sqrt_exact(Fraction(8, 3))
    assert isinstance(r, Surd)
    assert r.d == 6 and r.a == 0 and r.b == Fraction(2, 3)
    assert r * r == Fraction(8, 3)


def test_inv_sqrt_squares_to_reciprocal():
    for k in range(1, 30):
        u = inv_sqrt(k)
        assert u * u == Fraction(1, k)
        assert math.isclose(float(u), 1 / math.sqrt(k))


def test_sqrt_of_negative_rejected():
    with pytest.raises(InvalidArgument):
        sqrt_exact(Fraction(-1))


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, rationals, rationals, radicands)
def test_surd_field_operations_match_floats(a, b, c, e, d):
    x = Surd.make(a, b, d)
    y = Surd.make(c, e, d)
    fx, fy = float(x), float(y)
    assert math.isclose(float(x + y), fx + fy, abs_tol=1e-9)
    assert math.isclose(float(x - y), fx - fy, abs_tol=1e-9)
    assert math.isclose(float(x * y), fx * fy, rel_tol=1e-9, abs_tol=1e-9)
    if y != 0:
        q = x / y
        assert q * y == x
    if fx < fy - 1e-9:
        assert x < y and not x >= y
    if fx > fy + 1e-9:
        assert x > y


@settings(max_examples=100, deadline=None)
@given(rationals, rationals, radicands)
def test_surd_sign_and_abs(a, b, d):
    x = Surd.make(a, b, d)
    f = float(x)
    if abs(f) > 1e-9:
        assert (x > 0) == (f > 0)
        assert abs(x) >= 0


def test_surd_mixed_radicands_rejected():
    with pytest.raises(InvalidArgument):
        sqrt_exact(2) + sqrt_exact(3)


def test_surd_collapses_to_fraction():
    r = sqrt_exact(2)
    assert isinstance(r * r, Fraction)
    assert isinstance(r - r, Fraction)


def test_fmt_and_to_exact():
    assert fmt(Fraction(2, 15)) == "2/15"
    assert fmt(Fraction(3)) == "3"
    assert fmt(sqrt_exact(2)) == "sqrt(2)"
    assert fmt(1 + 3 * sqrt_exact(5)) == "1 + 3*sqrt(5)"
    assert to_exact("10/15") == Fraction(2, 3)
    assert to_exact(np.int64(4)) == 4
    assert isinstance(to_exact(0.5), float)
    with pytest.raises(InvalidArgument):
        to_exact(True)


def test_solve_exact_small_system():
    x = solve_exact([[2, 1], [1, 3]], [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(SingularityError):
        solve_exact([[1, 2], [2, 4]], [1, 1])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_bareiss_matches_numpy(rows):
    exact = det_bareiss(rows)
    assert math.isclose(float(exact), float(np.linalg.det(np.array(rows, float))),
                        rel_tol=1e-9, abs_tol=1e-6)


def test_det_bareiss_rational_entries():
    A = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert det_bareiss(A) == Fraction(1, 10) - Fraction(1, 12)


def test_psd_nullity():
    assert psd_nullity([[Fraction(1), 0], [0, Fraction(0)]]) == 1
    assert psd_nullity([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(1)]]) is None
    assert psd_nullity([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]) == 0
    # rank-one all-ones matrix: PSD with nullity n-1
    n = 4
    assert psd_nullity([[Fraction(1)] * n for _ in range(n)]) == n - 1


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False))
def test_psd_nullity_on_gram_matrices(n, r, rnd):
    B = [[Fraction(rnd.randint(-3, 3)) for _ in range(r)] for _ in range(n)]
    G = [[sum(B[i][t] * B[j][t] for t in range(r)) for j in range(n)] for i in range(n)]
    assert psd_nullity(G) == n - rank_exact(B)
