import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from eoptd.ball import BallSupportSets
from eoptd.cube import barycenter_points
from eoptd.design import feature_matrix
from eoptd.errors import InvalidArgument
from eoptd.optimizer import min_eigpair, numeric_E_optimizer, project_simplex


@settings(max_examples=200, deadline=None)
@given(arrays(np.float64, st.integers(1, 12), elements=st.floats(-5, 5)))
def test_projection_lands_on_simplex(v):
    w = project_simplex(v)
    assert np.all(w >= 0) and abs(w.sum() - 1) < 1e-12


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, st.integers(2, 8), elements=st.floats(-3, 3)))
def test_projection_is_nearest_point(v):
    w = project_simplex(v)
    rng = np.random.default_rng(0)
    for _ in range(20):
        u = rng.dirichlet(np.ones(len(v)))
        assert np.linalg.norm(v - w) <= np.linalg.norm(v - u) + 1e-12


def test_projection_fixes_simplex_points():
    w = np.array([0.2, 0.3, 0.5])
    assert np.allclose(project_simplex(w), w)


def test_subgradient_matches_directional_derivative():
    rng = np.random.default_rng(3)
    X = rng.uniform(-1, 1, (20, 2))
    F = feature_matrix(2, X)
    w = rng.dirichlet(np.ones(20))
    lam, u = min_eigpair(F.T @ (w[:, None] * F))
    vals = np.linalg.eigvalsh(F.T @ (w[:, None] * F))
    assert vals[1] - vals[0] > 1e-4  # simple eigenvalue
    g = (F @ u) ** 2
    direction = rng.dirichlet(np.ones(20)) - w
    h = 1e-7
    w2 = w + h * direction
    lam2 = np.linalg.eigvalsh(F.T @ (w2[:, None] * F))[0]
    assert abs((lam2 - lam) / h - g @ direction) < 1e-6


def test_singular_candidates_rejected():
    with pytest.raises(InvalidArgument):
        numeric_E_optimizer(2, [[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0]], iterations=10)
    with pytest.raises(InvalidArgument):
        numeric_E_optimizer(2, [[0.0, 0.0, 0.0]], iterations=10)


def test_trace_envelope_and_weak_duality():
    X = np.array([p for r in range(3) for p in barycenter_points(2, r)], dtype=float)
    res = numeric_E_optimizer(2, X, iterations=300)
    assert np.all(np.diff(res.best_trace) >= 0)
    assert res.best_trace[-1] == res.lambda_min
    assert np.all(res.trace <= 0.2 + 1e-9)
    assert abs(res.weights.sum() - 1) < 1e-12


def test_ball_support_short_run():
    X = np.array([[float(v) for v in p] for p in BallSupportSets(2).all_points()])
    res = numeric_E_optimizer(2, X, iterations=500)
    assert np.all(res.trace <= 0.1 + 1e-9)
    assert res.lambda_min > 0.09


def test_custom_schedule_is_used():
    X = np.array([p for r in range(3) for p in barycenter_points(2, r)], dtype=float)
    frozen = numeric_E_optimizer(2, X, iterations=50, step_schedule=lambda t: 0.0)
    assert np.allclose(frozen.weights, 1 / 9)


def test_result_design():
    X = np.array([p for r in range(3) for p in barycenter_points(2, r)], dtype=float)
    res = numeric_E_optimizer(2, X, iterations=200)
    d = res.design("cube", threshold=1e-6)
    assert abs(sum(d.weights) - 1) < 1e-12
