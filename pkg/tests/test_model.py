from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eoptd.errors import InvalidArgument
from eoptd.model import ModelSpec, monomial_exponents, regression_vector


def test_dimension():
    for k in range(1, 25):
        assert ModelSpec(k).m == (k + 1) * (k + 2) // 2
    with pytest.raises(InvalidArgument):
        ModelSpec(0)


def test_regression_vector_examples():
    assert regression_vector(2, [1, 0]) == [1, 1, 0, 1, 0, 0]
    t = Fraction(1, 3)
    assert regression_vector(1, [t]) == [1, t * t, t]
    assert regression_vector(3, [1, 1, 1]) == [1] * 10


def test_regression_vector_length_mismatch():
    with pytest.raises(InvalidArgument):
        regression_vector(3, [1, 2])


def test_monomial_exponents():
    assert monomial_exponents(1) == [(0,), (2,), (1,)]
    assert monomial_exponents(2) == [(0, 0), (2, 0), (0, 2), (1, 0), (0, 1), (1, 1)]
    assert len(monomial_exponents(3)) == 10


def test_origin_maps_to_first_unit_vector():
    for k in range(1, 8):
        f = regression_vector(k, [0] * k)
        assert f[0] == 1 and all(v == 0 for v in f[1:])


points = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.fractions(-3, 3, max_denominator=9), min_size=k, max_size=k))


@settings(max_examples=100, deadline=None)
@given(points)
def test_entries_are_monomials(x):
    k = len(x)
    for val, alpha in zip(regression_vector(k, x), monomial_exponents(k)):
        expected = Fraction(1)
        for v, e in zip(x, alpha):
            expected *= v ** e
        assert val == expected


@settings(max_examples=100, deadline=None)
@given(points, st.randoms(use_true_random=False))
def test_coordinate_permutation_acts_consistently(x, rnd):
    k = len(x)
    perm = list(range(k))
    rnd.shuffle(perm)
    y = [x[perm[i]] for i in range(k)]
    fx, fy = regression_vector(k, x), regression_vector(k, y)
    spec = ModelSpec(k)
    sq_x, sq_y = fx[spec.square_slice], fy[spec.square_slice]
    lin_x, lin_y = fx[spec.linear_slice], fy[spec.linear_slice]
    assert sq_y == [sq_x[perm[i]] for i in range(k)]
    assert lin_y == [lin_x[perm[i]] for i in range(k)]
    cross_x = dict(zip(spec.pairs, fx[spec.cross_slice]))
    for (i, j), v in zip(spec.pairs, fy[spec.cross_slice]):
        a, b = sorted((perm[i], perm[j]))
        assert v == cross_x[(a, b)]
