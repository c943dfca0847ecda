import math
from fractions import Fraction as F

import numpy as np
import pytest

from eoptd.ball import optimal_moments
from eoptd.design import SymmetricMoments, symmetric_info_matrix
from eoptd.errors import ConvergenceError, InvalidArgument, SingularityError
from eoptd.exact import sqrt_exact
from eoptd.spectrum import (eigen_sym, lambda_min_symmetric, matrix_lambda_min,
                            numeric_spectrum, phi_p, symmetric_spectrum)

from conftest import random_moments

CUBE = SymmetricMoments(F(2, 5), F(1, 5), F(2, 5))


def test_cube_spectrum_k3():
    spec = symmetric_spectrum(CUBE, 3)
    assert spec.eigenvalues == ((F(1, 5), 6), (F(2, 5), 3), (F(8, 5), 1))
    assert spec.m == 10
    assert str(spec) == "{1/5 (x6), 2/5 (x3), 8/5 (x1)}"


def test_ball_spectrum_k2():
    lam, mult = lambda_min_symmetric(SymmetricMoments(F(3, 10), F(1, 10), F(2, 10)), 2)
    assert (lam, mult) == (F(1, 10), 3)


def test_point_mass_spectrum():
    spec = symmetric_spectrum(SymmetricMoments(F(0), F(0), F(0)), 3)
    assert spec.eigenvalues == ((0, 9), (1, 1))


def test_lambda_min_examples():
    assert lambda_min_symmetric(CUBE, 4) == (F(1, 5), 10)
    assert lambda_min_symmetric(optimal_moments(3), 3) == (F(1, 17), 6)
    assert lambda_min_symmetric(SymmetricMoments(F(1), F(1), F(1)), 3)[0] == 0


def test_irrational_eigenvalues_are_surds():
    spec = symmetric_spectrum(SymmetricMoments(F(1, 3), F(1, 10), F(1, 4)), 2)
    values = [v for v, _ in spec.eigenvalues]
    assert any(not isinstance(v, F) for v in values)
    M = symmetric_info_matrix(2, SymmetricMoments(1 / 3, 0.1, 0.25)).to_float()
    assert np.allclose(sorted(spec.multiset()), np.linalg.eigvalsh(M), atol=1e-12)


@pytest.mark.parametrize("seed", range(4))
def test_closed_form_spectrum_matches_jacobi(seed):
    rng = np.random.default_rng(seed)
    for trial in range(50):
        k = 2 + trial % 5
        mom = random_moments(rng, k)
        closed = sorted(symmetric_spectrum(mom, k).multiset())
        vals, _ = eigen_sym(symmetric_info_matrix(k, mom).to_float())
        assert np.max(np.abs(np.sort(vals) - closed)) <= 1e-10
        s = symmetric_spectrum(mom, k)
        assert s.eigenvalues[-1][0] > s.eigenvalues[0][0]


def test_lambda0_exceeds_lambda1():
    rng = np.random.default_rng(7)
    for _ in range(100):
        k = int(rng.integers(2, 7))
        mom = random_moments(rng, k)
        a, b, c = mom.a, mom.b, mom.c
        D = (1 - c - (k - 1) * b) ** 2 + 4 * k * a * a
        assert (1 + c + (k - 1) * b + math.sqrt(D)) / 2 > (1 + c + (k - 1) * b - math.sqrt(D)) / 2


def test_lambda_min_identity_for_equal_moments():
    rng = np.random.default_rng(3)
    for _ in range(50):
        k = int(rng.integers(2, 7))
        b = F(int(rng.integers(1, 40)), 200)
        a = F(int(rng.integers(1, 100)), 100)
        D = (1 - a - (k - 1) * b) ** 2 + 4 * k * a * a
        expected = min((1 + a + (k - 1) * b - sqrt_exact(D)) / 2, a - b, b)
        assert lambda_min_symmetric(SymmetricMoments(a, b, a), k)[0] == expected


def test_jacobi_basic():
    vals, vecs = eigen_sym(np.eye(4))
    assert np.allclose(vals, 1)
    vals, vecs = eigen_sym([[0, 1], [1, 0]])
    assert np.allclose(sorted(vals), [-1, 1])
    with pytest.raises(InvalidArgument):
        eigen_sym([[0, 1], [0, 0]])


def test_jacobi_structured_matrix_and_orthonormality():
    M = symmetric_info_matrix(2, CUBE).to_float()
    vals, V = eigen_sym(M)
    assert np.max(np.abs(np.sort(vals) - sorted(symmetric_spectrum(CUBE, 2).multiset()))) <= 1e-12
    assert np.max(np.abs(V.T @ V - np.eye(6))) <= 1e-12
    assert np.max(np.abs(M @ V - V * vals)) <= 1e-12


def test_jacobi_random_matrices():
    rng = np.random.default_rng(5)
    for n in (3, 8, 15):
        A = rng.standard_normal((n, n))
        A = A + A.T
        vals, V = eigen_sym(A)
        assert np.allclose(np.sort(vals), np.linalg.eigvalsh(A), atol=1e-10)
        assert np.max(np.abs(V.T @ V - np.eye(n))) <= 1e-12


def test_jacobi_sweep_limit():
    A = np.random.default_rng(0).standard_normal((6, 6))
    with pytest.raises(ConvergenceError):
        eigen_sym(A + A.T, max_sweeps=1)


def test_numeric_spectrum_merges():
    s = numeric_spectrum(symmetric_info_matrix(3, CUBE).to_float())
    assert [mult for _, mult in s.eigenvalues] == [6, 3, 1]


def test_matrix_lambda_min_exact_and_float():
    M = symmetric_info_matrix(3, CUBE)
    assert matrix_lambda_min(M) == (F(1, 5), 6, True)
    val, mult, exact = matrix_lambda_min(M.to_float())
    assert not exact and abs(val - 0.2) < 1e-12 and mult == 6


def test_phi_p():
    M = symmetric_info_matrix(3, CUBE)
    assert abs(phi_p(M, -math.inf) - 0.2) < 1e-12
    D = np.diag([1.0, 2.0])
    assert abs(phi_p(D, -1) - 4 / 3) < 1e-12
    assert abs(phi_p(D, 1) - 1.5) < 1e-12
    assert abs(phi_p(D, 0) - math.sqrt(2)) < 1e-12
    with pytest.raises(InvalidArgument):
        phi_p(D, 2)
    with pytest.raises(SingularityError):
        phi_p(np.diag([1.0, 0.0]), -1)


def test_phi_p_monotone_in_p():
    rng = np.random.default_rng(9)
    for _ in range(20):
        B = rng.standard_normal((5, 5))
        M = B @ B.T + 0.1 * np.eye(5)
        vals = [phi_p(M, p) for p in (-math.inf, -2, -1, 0, 1)]
        assert all(x <= y + 1e-12 for x, y in zip(vals, vals[1:]))
