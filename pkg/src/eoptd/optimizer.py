"""Projected subgradient ascent on ``lambda_min(M(w))`` over a fixed candidate set.

A purely numerical cross-check of the analytic designs.  The subgradient of
``lambda_min`` at ``w`` is ``g_i = (u^T f(x_i))^2`` for a unit eigenvector ``u``
of the smallest eigenvalue; with a repeated eigenvalue any such ``u`` gives a
valid subgradient, and we take the first one the Jacobi solver returns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import Design, feature_matrix
from .errors import InvalidArgument
from .model import _spec
from .spectrum import eigen_sym

__all__ = ["project_simplex", "OptimizerResult", "min_eigpair", "numeric_E_optimizer"]


def project_simplex(v) -> np.ndarray:
    """Euclidean projection onto ``{w >= 0, sum w = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) == 0:
        raise InvalidArgument("need a nonempty vector")
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def min_eigpair(M: np.ndarray):
    """Smallest eigenvalue and a unit eigenvector (lowest index on ties)."""
    vals, vecs = eigen_sym(M)
    i = int(np.argmin(vals))
    return float(vals[i]), vecs[:, i]


@dataclass
class OptimizerResult:
    weights: np.ndarray
    lambda_min: float
    trace: np.ndarray
    best_trace: np.ndarray
    points: np.ndarray

    def design(self, space: str = "cube", threshold: float = 0.0) -> Design:
        keep = self.weights > threshold
        w = self.weights[keep] / self.weights[keep].sum()
        return Design([tuple(p) for p in self.points[keep]], list(w), space)


def numeric_E_optimizer(spec, candidate_points, iterations: int = 5000,
                        step0: float = 0.5, step_schedule=None) -> OptimizerResult:
    """Maximize ``lambda_min(sum_i w_i f(x_i) f(x_i)^T)`` over the simplex.

    Starts from uniform weights and takes steps ``step_schedule(t)`` along the
    normalized, mean-centered subgradient.  The default ``step0 * t^(-3/4)``
    is divergent-sum, square-summable and settles faster than ``1/sqrt(t)``.
    Returns the best iterate seen; ``trace`` holds the per-iteration values
    and ``best_trace`` their running maximum.
    """
    spec = _spec(spec)
    if step_schedule is None:
        def step_schedule(t):
            return step0 * t ** -0.75
    X = np.asarray(candidate_points, dtype=float)
    if X.ndim != 2 or X.shape[1] != spec.k:
        raise InvalidArgument(f"candidate points must be an n x {spec.k} array")
    F = feature_matrix(spec, X)
    n = len(F)
    w = np.full(n, 1.0 / n)
    lam0 = min_eigpair(F.T @ (w[:, None] * F))[0]
    if lam0 <= 1e-12:
        raise InvalidArgument("candidate set gives a singular information matrix")
    trace = np.empty(iterations)
    best, best_w = -np.inf, w.copy()
    for t in range(1, iterations + 1):
        lam, u = min_eigpair(F.T @ (w[:, None] * F))
        trace[t - 1] = lam
        if lam > best:
            best, best_w = lam, w.copy()
        g = (F @ u) ** 2
        g -= g.mean()
        norm = np.linalg.norm(g)
        if norm == 0:
            break
        w = project_simplex(w + step_schedule(t) * g / norm)
    else:
        t = iterations
    trace = trace[:t]
    return OptimizerResult(best_w, float(best), trace, np.maximum.accumulate(trace), X)
