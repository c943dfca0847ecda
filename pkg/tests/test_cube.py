from fractions import Fraction as F
from itertools import permutations
from math import comb

import pytest

from eoptd.cube import (BarycenterClass, LAMBDA_MIN, TripleSolution, barycenter_points,
                        class_coefficients, closed_form_mass, conjecture_design,
                        diophantine_pairs, enumerate_feasible_triples, expand_design,
                        minimal_support_design, solve_pair, solve_triple, support_count)
from eoptd.design import moments_of
from eoptd.errors import InvalidArgument
from eoptd.spectrum import lambda_min_symmetric

# k: (depths, masses) as printed, unreduced fractions kept as given
TABLE1 = {
    1: ((0, 1), (F(2, 5), F(3, 5))),
    2: ((0, 1, 2), (F(1, 5), F(2, 5), F(2, 5))),
    3: ((1, 3), (F(3, 5), F(2, 5))),
    4: ((0, 3), (F(1, 5), F(4, 5))),
    5: ((0, 3, 5), (F(2, 15), F(10, 15), F(3, 15))),
    6: ((0, 4, 6), (F(3, 20), F(15, 20), F(2, 20))),
    7: ((0, 5), (F(4, 25), F(21, 25))),
    8: ((0, 5, 8), (F(9, 75), F(56, 75), F(10, 75))),
    9: ((0, 6, 9), (F(2, 15), F(12, 15), F(1, 15))),
    10: ((0, 7), (F(1, 7), F(6, 7))),
    11: ((0, 7, 11), (F(8, 70), F(55, 70), F(7, 70))),
    12: ((0, 8, 12), (F(5, 40), F(33, 40), F(2, 40))),
    13: ((0, 9), (F(2, 15), F(13, 15))),
    14: ((0, 9, 14), (F(25, 225), F(182, 225), F(18, 225))),
    15: ((0, 10, 15), (F(3, 25), F(21, 25), F(1, 25))),
    16: ((0, 11), (F(7, 55), F(48, 55))),
    17: ((0, 11, 17), (F(18, 165), F(136, 165), F(11, 165))),
    18: ((0, 12, 18), (F(7, 60), F(51, 60), F(2, 60))),
    19: ((0, 13), (F(8, 65), F(57, 65))),
    20: ((0, 13, 20), (F(49, 455), F(380, 455), F(26, 455))),
    21: ((0, 14, 21), (F(4, 35), F(30, 35), F(1, 35))),
    22: ((0, 15), (F(3, 25), F(22, 25))),
    23: ((0, 15, 23), (F(32, 300), F(253, 300), F(15, 300))),
    24: ((0, 16, 24), (F(9, 80), F(69, 80), F(2, 80))),
}


def test_barycenter_points():
    assert set(barycenter_points(2, 1)) == {(0, 1), (0, -1), (1, 0), (-1, 0)}
    assert barycenter_points(3, 3) == [(0, 0, 0)]
    assert len(barycenter_points(5, 3)) == comb(5, 3) * 4 == 40


@pytest.mark.parametrize("k", range(1, 9))
def test_classes_partition_full_factorial(k):
    assert sum(BarycenterClass(k, r).cardinality for r in range(k + 1)) == 3 ** k
    pts = [p for r in range(k + 1) for p in barycenter_points(k, r)]
    assert len(set(pts)) == 3 ** k


@pytest.mark.parametrize("k", range(2, 12))
def test_class_coefficients_are_normalized_counts(k):
    for r in range(k + 1):
        cls = BarycenterClass(k, r)
        a, b = class_coefficients(k, r)
        assert F(cls.a_count, cls.cardinality) == a == F(k - r, k)
        assert F(cls.b_count, cls.cardinality) == b
        # brute-force count over the points
        pts = cls.points()
        assert sum(1 for p in pts if p[0] != 0) == cls.a_count
        assert sum(1 for p in pts if p[0] * p[1] != 0) == cls.b_count


def test_solve_triple_examples():
    assert solve_triple(5, 0, 3, 5).masses == (F(2, 15), F(10, 15), F(3, 15))
    assert solve_triple(2, 0, 1, 2).masses == (F(1, 5), F(2, 5), F(2, 5))
    assert solve_triple(6, 0, 4, 6).masses == (F(3, 20), F(15, 20), F(2, 20))
    assert solve_triple(9, 0, 6, 9).masses == (F(2, 15), F(12, 15), F(1, 15))
    assert solve_triple(4, 0, 1, 2) is None
    with pytest.raises(InvalidArgument):
        solve_triple(4, 2, 1, 3)


@pytest.mark.parametrize("k", range(3, 13))
def test_closed_form_masses_under_all_permutations(k):
    for r1 in range(k + 1):
        for r2 in range(r1 + 1, k + 1):
            for r3 in range(r2 + 1, k + 1):
                sol = solve_triple(k, r1, r2, r3)
                if sol is None:
                    continue
                depths = (r1, r2, r3)
                for perm in permutations(range(3)):
                    i, j, l = perm
                    assert sol.masses[i] == closed_form_mass(k, depths[i], depths[j], depths[l])


def test_enumeration_contains_paper_solutions():
    sols2 = {s.support_depths: s.support_masses for s in enumerate_feasible_triples(2)}
    assert sols2[(0, 1, 2)] == (F(1, 5), F(2, 5), F(2, 5))
    sols3 = {s.support_depths: s.support_masses for s in enumerate_feasible_triples(3)}
    assert sols3[(1, 3)] == (F(3, 5), F(2, 5))
    sols1 = {s.support_depths: s.support_masses for s in enumerate_feasible_triples(1)}
    assert sols1 == {(0, 1): (F(2, 5), F(3, 5))}


def test_enumeration_sorted_and_optimal():
    for k in range(1, 13):
        sols = enumerate_feasible_triples(k)
        keys = [(s.support_count, s.support_depths) for s in sols]
        assert keys == sorted(keys)
        assert all(s.is_optimal() for s in sols)


def test_diophantine_pairs():
    assert (0, 3) in diophantine_pairs(4)
    for k in (2, 6, 8):
        assert diophantine_pairs(k) == []
    for k in range(1, 25):
        for s, t in diophantine_pairs(k):
            sol = solve_pair(k, s, t)
            assert sol is not None
            mom = sol.moments()
            assert mom.a == F(2, 5) and (k == 1 or mom.b == F(1, 5))


def test_pair_solutions_match_equation():
    # a two-class design exists exactly when the pair solves the quadratic equation
    for k in range(2, 16):
        for s in range(k + 1):
            for t in range(s + 1, k + 1):
                has = solve_pair(k, s, t) is not None
                if has:
                    assert (s, t) in diophantine_pairs(k)


@pytest.mark.parametrize("k", sorted(TABLE1))
def test_minimal_support_reproduces_table(k):
    depths, masses = TABLE1[k]
    sol = minimal_support_design(k)
    assert sol.support_depths == depths
    assert sol.support_masses == masses


def test_minimal_support_counts():
    assert minimal_support_design(5).support_count == 32 + 40 + 1 == 73
    assert minimal_support_design(6).support_count == 64 + 60 + 1 == 125
    assert minimal_support_design(12).masses == (F(5, 40), F(33, 40), F(2, 40))


def test_support_count_examples():
    assert support_count(6, (0, 2, 5)) == 316
    assert support_count(6, (0, 4, 6)) == 125
    assert support_count(2, (0, 1, 2)) == 9


def test_conjecture_design_examples():
    assert conjecture_design(7).masses == (F(4, 25), F(21, 25), 0)
    assert conjecture_design(6).masses == (F(3, 20), F(15, 20), F(2, 20))
    assert conjecture_design(5).masses == (F(2, 15), F(10, 15), F(3, 15))
    with pytest.raises(InvalidArgument):
        conjecture_design(3)


@pytest.mark.parametrize("k", [k for k in range(1, 25) if k != 3])
def test_conjecture_agrees_with_minimal_support(k):
    conj = conjecture_design(k)
    best = minimal_support_design(k)
    assert conj.support_depths == best.support_depths
    assert conj.support_masses == best.support_masses


def test_every_enumerated_design_has_lambda_one_fifth():
    for k in range(1, 25):
        for sol in enumerate_feasible_triples(k)[:5]:
            lam, mult = lambda_min_symmetric(sol.moments(), k)
            assert lam == LAMBDA_MIN
            assert mult == k * (k + 1) // 2


def test_expand_design_examples():
    d = expand_design(2, solve_triple(2, 0, 1, 2))
    assert len(d) == 9
    corner = dict(zip(d.points, d.weights))[(1, 1)]
    assert corner == F(1, 20)
    d1 = expand_design(1, minimal_support_design(1))
    assert dict(zip(d1.points, d1.weights)) == {(1,): F(1, 5), (-1,): F(1, 5), (0,): F(3, 5)}
    d4 = expand_design(4, solve_pair(4, 0, 3))
    w = dict(zip(d4.points, d4.weights))
    # 16 corners and C(4,3) * 2 = 8 depth-3 points
    assert len(d4) == 24
    assert w[(1, 1, 1, 1)] == F(1, 80) and w[(1, 0, 0, 0)] == F(1, 10)


@pytest.mark.parametrize("k", range(1, 7))
def test_expanded_moments_match_class_formula(k):
    sol = minimal_support_design(k)
    assert moments_of(k, expand_design(k, sol)) == sol.moments()


def test_triple_solution_str():
    assert str(minimal_support_design(5)) == "k=5 [E0: 2/15, E3: 2/3, E5: 1/5] N=73"


def test_zero_mass_is_not_support():
    sol = TripleSolution(4, (0, 3, 4), (F(1, 5), F(4, 5), F(0)))
    assert sol.support_depths == (0, 3) and sol.N == 24
