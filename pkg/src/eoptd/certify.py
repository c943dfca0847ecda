"""Equivalence-theorem certificates for E-optimality.

A design ``xi*`` with smallest eigenvalue ``lam`` is E-optimal iff there are
eigenvectors ``q_i`` of ``M(xi*)`` for ``lam`` and weights ``w_i >= 0`` summing
to one such that the extremal polynomial

    d(x) = sum_i w_i (q_i^T f(x))^2 / |q_i|^2

stays below ``lam`` on the whole design space.  The certificates below use
explicit integer eigenbases; the vectors are kept unnormalized and the norms
are applied at evaluation time.  ``Z = sum_i w_i q_i q_i^T / |q_i|^2`` is the
matching dual matrix (``trace Z = 1``), and ``f^T Z f`` is ``d`` itself.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from . import ball as _ball
from . import cube as _cube
from .design import (Design, InfoMatrix, feature_matrix, information_matrix,
                     symmetric_info_matrix)
from .errors import InvalidArgument
from .exact import fmt, is_exact, solve_exact
from .model import ModelSpec, _spec, monomial_exponents, regression_vector
from .spectrum import lambda_min_symmetric, matrix_lambda_min

__all__ = [
    "ExtremalCertificate",
    "cube_certificate",
    "ball_certificate",
    "certificate_for",
    "cube_weight_system",
    "evaluate_extremal",
    "evaluate_extremal_many",
    "eigen_residuals",
    "polynomial_identity",
    "VerificationReport",
    "verify_design",
    "verify_optimal",
    "DualGap",
    "dual_gap",
    "GRID_DIM_LIMIT",
    "random_points",
]

# above this dimension tensor grids are replaced by the one-dimensional reduction
GRID_DIM_LIMIT = 6


@dataclass(frozen=True, eq=False)
class ExtremalCertificate:
    """Eigenbasis, weights and closed form of an extremal polynomial.

    ``vectors`` is an ``m x s`` object array of integer eigenvectors (columns).
    The closed form is ``lam * (1 - gamma * T(x))`` with
    ``T(x) = sum x_i^2 (1 - x_i^2)`` on the cube and
    ``T(x) = |x|^2 (1 - |x|^2)`` on the ball.
    """

    space: str
    k: int
    vectors: np.ndarray
    norms2: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]
    lam: Fraction
    gamma: Fraction

    @property
    def spec(self) -> ModelSpec:
        return ModelSpec(self.k)

    @property
    def s(self) -> int:
        return self.vectors.shape[1]

    @cached_property
    def columns(self) -> list[dict[int, int]]:
        """Nonzero entries of each certificate vector."""
        return [{j: v for j, v in enumerate(self.vectors[:, i]) if v != 0}
                for i in range(self.s)]

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        """``w_i / |q_i|^2``."""
        return tuple(w / n for w, n in zip(self.weights, self.norms2))

    def closed_form(self, x) -> object:
        x = list(x)
        if self.space == "cube":
            t = sum(v * v * (1 - v * v) for v in x)
        else:
            r2 = sum(v * v for v in x)
            t = r2 * (1 - r2)
        return self.lam * (1 - self.gamma * t)

    def dual_matrix(self) -> np.ndarray:
        """Exact ``Z = sum_i w_i q_i q_i^T / |q_i|^2``."""
        m = self.vectors.shape[0]
        Z = np.full((m, m), Fraction(0), dtype=object)
        for alpha, col in zip(self.alphas, self.columns):
            if alpha == 0:
                continue
            for p, u in col.items():
                for q, v in col.items():
                    Z[p, q] += alpha * u * v
        return Z

    @cached_property
    def _float_factors(self):
        """Split into multi-entry columns (``F @ R``) and single-entry columns (diagonal)."""
        dense_cols, dense_scale, unit = [], [], defaultdict(float)
        for i, (alpha, col) in enumerate(zip(self.alphas, self.columns)):
            if alpha == 0:
                continue
            if len(col) == 1:
                (j, v), = col.items()
                unit[j] += float(alpha) * float(v) ** 2
            else:
                dense_cols.append(np.array([float(v) for v in self.vectors[:, i]]))
                dense_scale.append(math.sqrt(float(alpha)))
        R = (np.column_stack(dense_cols) * np.array(dense_scale)
             if dense_cols else np.zeros((self.vectors.shape[0], 0)))
        return R, dict(unit)


def _assemble(space, k, G, lam, gamma, weights_fn) -> ExtremalCertificate:
    spec = ModelSpec(k)
    m = spec.m
    pairs = k * (k - 1) // 2
    s = k + pairs
    Q = np.zeros((m, s), dtype=object)
    for r in range(k):
        for j in range(k + 1):
            Q[j, r] = G[r][j]
    for t in range(pairs):
        Q[2 * k + 1 + t, k + t] = 1
    norms2 = tuple(Fraction(sum(v * v for v in G[r])) for r in range(k)) + (Fraction(1),) * pairs
    partial = ExtremalCertificate(space, k, Q, norms2, tuple([Fraction(0)] * s), lam, gamma)
    weights = weights_fn(partial)
    return ExtremalCertificate(space, k, Q, norms2, tuple(weights), lam, gamma)


def _contribution(cert: ExtremalCertificate, i: int, x) -> Fraction:
    f = regression_vector(cert.k, x)
    v = sum(c * f[j] for j, c in cert.columns[i].items())
    return v * v / cert.norms2[i]


def _solve_grouped(cert: ExtremalCertificate, groups: Sequence[Sequence[int]],
                   points: Sequence, lam) -> list[Fraction]:
    """Weights constant on each group, fixed by ``d(x) = lam`` at ``points`` and ``sum w = 1``."""
    rows, rhs = [], []
    for x in points:
        rows.append([sum(_contribution(cert, i, x) for i in g) for g in groups])
        rhs.append(lam)
    rows.append([Fraction(len(g)) for g in groups])
    rhs.append(Fraction(1))
    per_group = solve_exact(rows, rhs)
    w = [Fraction(0)] * cert.s
    for g, val in zip(groups, per_group):
        for i in g:
            w[i] = val
    return w


def _cube_G(k: int) -> list[list[int]]:
    G = [[k] + [-2] * k]
    for r in range(1, k):
        row = [0, -1]
        for j in range(1, k):
            row.append(-1 if r + j < k else (k - r if r + j == k else 0))
        G.append(row)
    return G


def _cube_points(k: int) -> list[tuple[int, ...]]:
    """``(0, ..., 0, 1, ..., 1)`` with ``i`` trailing ones, ``i = 0 .. k-2``."""
    return [tuple([0] * (k - i) + [1] * i) for i in range(k - 1)]


def cube_weight_system(k: int):
    """The lower-triangular system ``B w = (1/5, ..., 1/5, 1)`` for the cube weights."""
    cert = cube_certificate(k)
    pts = _cube_points(k)
    B = [[_contribution(cert, r, x) for r in range(k)] for x in pts]
    B.append([Fraction(1)] * k)
    return B, [_cube.LAMBDA_MIN] * len(pts) + [Fraction(1)]


def cube_certificate(k: int) -> ExtremalCertificate:
    """Certificate for the cube, ``lam = 1/5`` and ``d = (1/5)(1 - (4/k) sum x_i^2 (1 - x_i^2))``."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument("k must be a positive integer")
    lam = _cube.LAMBDA_MIN
    groups = [[r] for r in range(k)]
    return _assemble("cube", k, _cube_G(k), lam, Fraction(4, k),
                     lambda c: _solve_grouped(c, groups, _cube_points(k), lam))


def _ball_G(k: int) -> list[list[int]]:
    G = [[k] + [-(k + 1)] * k]
    for r in range(1, k):
        row = [0, 1]
        for j in range(1, k):
            row.append(-r if j == r else (1 if j < r else 0))
        G.append(row)
    return G


def ball_certificate(k: int) -> ExtremalCertificate:
    """Certificate for the ball, ``lam = 1/K`` and ``d = (1/K)(1 - (2(k+1)/k)|x|^2 (1 - |x|^2))``."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument("k must be a positive integer")
    K = k * k + 2 * k + 2
    lam = Fraction(1, K)
    s = k * (k + 1) // 2
    groups = [[0], list(range(1, k)), list(range(k, s))]
    groups = [g for g in groups if g]
    origin = tuple([0] * k)
    e1 = tuple([1] + [0] * (k - 1))
    points = [origin, e1][: len(groups) - 1]
    return _assemble("ball", k, _ball_G(k), lam, Fraction(2 * (k + 1), k),
                     lambda c: _solve_grouped(c, groups, points, lam))


def certificate_for(space: str, k: int) -> ExtremalCertificate:
    if space == "cube":
        return cube_certificate(k)
    if space == "ball":
        return ball_certificate(k)
    raise InvalidArgument(f"unknown design space {space!r}")


# ---------------------------------------------------------------------------
# evaluation


def _in_space(space, x, tol=1e-12) -> bool:
    if all(is_exact(v) for v in x):
        return (all(abs(v) <= 1 for v in x) if space == "cube"
                else sum(v * v for v in x) <= 1)
    xs = [float(v) for v in x]
    if space == "cube":
        return all(abs(v) <= 1 + tol for v in xs)
    return sum(v * v for v in xs) <= 1 + tol


def evaluate_extremal(cert: ExtremalCertificate, x):
    """``d(x) = sum_i w_i (q_i^T f(x))^2 / |q_i|^2``, exact for exact ``x``."""
    x = list(x)
    if len(x) != cert.k:
        raise InvalidArgument(f"x must have length {cert.k}")
    if not _in_space(cert.space, x):
        raise InvalidArgument(f"x lies outside the {cert.space}")
    f = regression_vector(cert.k, x)
    exact = all(is_exact(v) for v in x)
    total = Fraction(0) if exact else 0.0
    for alpha, col in zip(cert.alphas, cert.columns):
        if alpha == 0:
            continue
        if exact:
            v = sum(c * f[j] for j, c in col.items())
            total += alpha * v * v
        else:
            v = sum(float(c) * float(f[j]) for j, c in col.items())
            total += float(alpha) * v * v
    return total


def evaluate_extremal_many(cert: ExtremalCertificate, X: np.ndarray) -> np.ndarray:
    """Vectorized float evaluation at the rows of ``X`` (no space check)."""
    F = feature_matrix(cert.k, X)
    R, unit = cert._float_factors
    out = np.sum((F @ R) ** 2, axis=1) if R.shape[1] else np.zeros(len(F))
    for j, coef in unit.items():
        out += coef * F[:, j] ** 2
    return out


def eigen_residuals(cert: ExtremalCertificate, M) -> tuple[bool, float]:
    """Check ``M q_i = lam q_i`` for every certificate vector and pairwise orthogonality.

    Exact matrices are checked exactly (the returned residual is then 0.0 on
    success); float matrices return the largest residual and pass below
    ``1e-12`` relative to the matrix scale.
    """
    E = M.entries if isinstance(M, InfoMatrix) else np.asarray(M)
    m = E.shape[0]
    exact = E.dtype == object
    lam = cert.lam if exact else float(cert.lam)
    nz_cols = [[(i, E[i, j]) for i in range(m) if E[i, j] != 0] for j in range(m)]
    ok, worst = True, 0.0
    for col in cert.columns:
        acc: dict[int, object] = {i: -lam * v for i, v in col.items()}
        for j, v in col.items():
            for i, e in nz_cols[j]:
                acc[i] = acc.get(i, 0) + e * v
        res = max((abs(float(r)) for r in acc.values()), default=0.0)
        worst = max(worst, res)
        if exact and any(r != 0 for r in acc.values()):
            ok = False
    # orthogonality of the integer basis, only for vectors sharing a coordinate
    owners = defaultdict(list)
    for t, col in enumerate(cert.columns):
        for j in col:
            owners[j].append(t)
    checked = set()
    for ts in owners.values():
        for a in ts:
            for b in ts:
                if a < b and (a, b) not in checked:
                    checked.add((a, b))
                    ca, cb = cert.columns[a], cert.columns[b]
                    if sum(v * cb.get(j, 0) for j, v in ca.items()) != 0:
                        ok = False
    if not exact:
        scale = max(1.0, float(np.max(np.abs(np.array(E, dtype=float)))))
        ok = ok and worst <= 1e-12 * scale * max(float(n) for n in cert.norms2) ** 0.5
    return ok, worst


def _poly_add(poly, key, val):
    poly[key] = poly.get(key, Fraction(0)) + val
    if poly[key] == 0:
        del poly[key]


def polynomial_identity(cert: ExtremalCertificate) -> bool:
    """Exact polynomial identity between ``f^T Z f`` and the closed form."""
    k = cert.k
    exps = monomial_exponents(k)
    Z = cert.dual_matrix()
    raw: dict[tuple[int, ...], Fraction] = {}
    m = Z.shape[0]
    for p in range(m):
        for q in range(m):
            if Z[p, q] != 0:
                key = tuple(u + v for u, v in zip(exps[p], exps[q]))
                _poly_add(raw, key, Z[p, q])
    closed: dict[tuple[int, ...], Fraction] = {}
    lam, g = cert.lam, cert.gamma

    def mono(**pw):
        e = [0] * k
        for idx, p in pw.items():
            e[int(idx[1:])] += p
        return tuple(e)

    _poly_add(closed, tuple([0] * k), lam)
    for i in range(k):
        _poly_add(closed, mono(**{f"i{i}": 2}), -lam * g)
        _poly_add(closed, mono(**{f"i{i}": 4}), lam * g)
    if cert.space == "ball":
        for i in range(k):
            for j in range(i + 1, k):
                _poly_add(closed, mono(**{f"i{i}": 2, f"j{j}": 2}), 2 * lam * g)
    return raw == closed


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    lambda_min: object
    multiplicity: int
    lambda_exact: bool
    max_d: float
    argmax: list
    gap: float
    support_equality_max_err: float
    eigen_ok: bool
    weights_ok: bool
    identity_ok: bool
    method: str
    passed: bool
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "lambda_min": fmt(self.lambda_min),
            "multiplicity": self.multiplicity,
            "max_d": float(self.max_d),
            "gap": float(self.gap),
            "support_equality_max_err": float(self.support_equality_max_err),
            "pass": bool(self.passed),
            "method": self.method,
            "eigen_ok": self.eigen_ok,
            "weights_ok": self.weights_ok,
            "identity_ok": self.identity_ok,
            "argmax": [float(v) for v in self.argmax],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _grid_maximize_raw(cert: ExtremalCertificate, g: int):
    """Best tensor-grid point with ``g`` values per axis.

    The trailing coordinates form a block whose monomials are computed once;
    each setting of the leading coordinates only rescales the monomial
    columns, so every chunk costs one small matrix product.
    """
    k = cert.k
    lin = np.linspace(-1.0, 1.0, g)
    n_suffix = 1
    while n_suffix < k and g ** (n_suffix + 1) <= 1 << 18:
        n_suffix += 1
    n_prefix = k - n_suffix
    grids = np.meshgrid(*([lin] * n_suffix), indexing="ij")
    suffix = np.column_stack([a.ravel() for a in grids])
    suffix_r2 = np.einsum("ij,ij->i", suffix, suffix)
    R, unit = cert._float_factors
    active = sorted(set(np.flatnonzero(np.any(R != 0, axis=1))) | set(unit))
    exps = np.array(monomial_exponents(k))[active]
    S = np.ones((len(suffix), len(active)))
    for c in range(n_suffix):
        S *= suffix[:, [c]] ** exps[:, n_prefix + c]
    R_act = R[active]
    unit_pos = [active.index(j) for j in unit]
    unit_coef = np.array([unit[j] for j in unit])
    S_unit2 = S[:, unit_pos] ** 2
    dense_rows = [i for i in range(len(active)) if i not in set(unit_pos) or np.any(R_act[i] != 0)]
    S_dense, R_dense = S[:, dense_rows], R_act[dense_rows]
    best, arg = -math.inf, None
    for pv in product(lin, repeat=n_prefix):
        pv = np.array(pv)
        r2 = float(pv @ pv)
        if cert.space == "ball" and r2 > 1.0 + 1e-15:
            continue
        scale = np.prod(pv[None, :] ** exps[:, :n_prefix], axis=1) if n_prefix else np.ones(len(active))
        vals = np.zeros(len(S))
        if R.shape[1]:
            FR = S_dense @ (scale[dense_rows, None] * R_dense)
            vals += np.einsum("ij,ij->i", FR, FR)
        if unit_pos:
            vals += S_unit2 @ (scale[unit_pos] ** 2 * unit_coef)
        if cert.space == "ball":
            vals[suffix_r2 > 1.0 + 1e-15 - r2] = -math.inf
        i = int(np.argmax(vals))
        if vals[i] > best:
            best, arg = float(vals[i]), np.concatenate([pv, suffix[i]])
    return best, arg


def _project(space, x):
    if space == "cube":
        return np.clip(x, -1.0, 1.0)
    r = np.linalg.norm(x)
    return x / r if r > 1.0 else x


def _refine(fun, space, x0, h0, tol=1e-12):
    """Coordinate ascent with step halving, staying inside the design space."""
    x = np.array(x0, dtype=float)
    best = fun(x)
    h = h0
    while h > tol:
        improved = False
        for i in range(len(x)):
            for step in (h, -h):
                y = x.copy()
                y[i] += step
                y = _project(space, y)
                val = fun(y)
                if val > best:
                    x, best, improved = y, val, True
        if not improved:
            h /= 2
    return best, x


def _grid_maximize(cert: ExtremalCertificate, g: int, extra_points=()):
    if g < 3:
        raise InvalidArgument("grid density must be at least 3")
    best, arg = _grid_maximize_raw(cert, g)
    for x in extra_points:
        val = float(evaluate_extremal_many(cert, np.array([x], dtype=float))[0])
        if val > best:
            best, arg = val, np.array(x, dtype=float)

    def fun(y):
        return float(evaluate_extremal_many(cert, y[None, :])[0])

    refined, x = _refine(fun, cert.space, arg, 2.0 / (g - 1))
    return (refined, x) if refined > best else (best, arg)


def _reduced_maximum(cert: ExtremalCertificate):
    """Exact maximum over the space via ``d = lam (1 - gamma T)``, ``T >= 0``.

    On the cube each ``x_i^2 (1 - x_i^2)`` lies in ``[0, 1/4]``; on the ball
    ``|x|^2 (1 - |x|^2)`` does.  With ``gamma >= 0`` the maximum is ``lam``,
    attained where ``T = 0``.  A sampled 1-D grid over the range of ``T``
    is evaluated exactly as a check on the sign.
    """
    t_max = Fraction(cert.k, 4) if cert.space == "cube" else Fraction(1, 4)
    values = [cert.lam * (1 - cert.gamma * t_max * Fraction(j, 64)) for j in range(65)]
    top = max(values)
    ok = cert.gamma >= 0 and top == cert.lam == values[0]
    return top, ok


def random_points(space: str, k: int, n: int, seed: int = 0) -> np.ndarray:
    """``n`` points uniform on the cube or the ball."""
    rng = np.random.default_rng(seed)
    if space == "cube":
        return rng.uniform(-1.0, 1.0, (n, k))
    g = rng.standard_normal((n, k))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return g * rng.uniform(0.0, 1.0, (n, 1)) ** (1.0 / k)


def _mat_lambda(spec, design: Design):
    M = information_matrix(spec, design)
    lam, mult, exact = matrix_lambda_min(M)
    return M, lam, mult, exact


def verify_design(spec, design: Design, cert: ExtremalCertificate, grid_per_axis: int = 21,
                  tol: float = 1e-10, support_tol: float | None = None,
                  n_random: int = 0, seed: int = 0) -> VerificationReport:
    """Check the equivalence-theorem conditions for ``design`` with ``cert``.

    Passes iff ``max d <= lam_min + tol`` over the space, ``|d(x_i) - lam_min|
    <= support_tol`` at every support point, the certificate vectors are
    eigenvectors of ``M(design)`` for ``lam_min`` and the weights are a
    probability vector.  For ``k > GRID_DIM_LIMIT`` the maximum comes from the
    exact one-dimensional reduction instead of a tensor grid.  ``n_random``
    extra probe points, drawn uniformly from the space with ``seed``, are
    added to the grid search.
    """
    spec = _spec(spec)
    if design.k != spec.k or cert.k != spec.k:
        raise InvalidArgument("design, certificate and model disagree on k")
    if design.space != cert.space:
        raise InvalidArgument(f"design space {design.space!r} does not match "
                              f"certificate space {cert.space!r}")
    support_tol = tol if support_tol is None else support_tol
    M, lam, mult, lam_exact = _mat_lambda(spec, design)
    eigen_ok, _ = eigen_residuals(cert, M)
    if eigen_ok and lam != cert.lam and not (not lam_exact and abs(lam - float(cert.lam)) <= tol):
        eigen_ok = False
    weights_ok = sum(cert.weights) == 1 and all(w >= 0 for w in cert.weights)

    # support equality
    err = 0.0
    for p in design.points:
        dv = evaluate_extremal(cert, p)
        diff = dv - lam
        err = max(err, abs(float(diff)))

    identity_ok = polynomial_identity(cert)
    if spec.k > GRID_DIM_LIMIT:
        top, reduced_ok = _reduced_maximum(cert)
        max_d, arg, method = float(top), [0.0] * spec.k, "reduced"
        identity_ok = identity_ok and reduced_ok
    else:
        probes = [[float(v) for v in p] for p in design.points]
        probes += list(random_points(cert.space, spec.k, n_random, seed))
        max_d, arg = _grid_maximize(cert, grid_per_axis, probes)
        method = "grid"
    gap = max_d - float(lam)
    passed = (gap <= tol and err <= support_tol and eigen_ok and weights_ok and identity_ok)
    return VerificationReport(lam, mult, lam_exact, max_d, list(arg), gap, err,
                              eigen_ok, weights_ok, identity_ok, method, passed)


def verify_optimal(space: str, k: int, moments=None) -> VerificationReport:
    """Reduced, expansion-free verification of a symmetric design given by its moments.

    Defaults to the package's optimal design for ``k``.  Works from the exact
    moments (so it scales to ``k = 24``): the closed-form spectrum of the
    structured matrix, exact eigenvector checks, the exact polynomial identity
    and the one-dimensional reduction.  Support equality is not checked here;
    on the known support sets ``T(x) = 0`` so ``d = lam`` there.
    """
    cert = certificate_for(space, k)
    if moments is not None:
        mom = moments
    elif space == "cube":
        mom = _cube.minimal_support_design(k).moments()
    else:
        mom = _ball.optimal_moments(k)
    M = symmetric_info_matrix(k, mom)
    lam, mult = lambda_min_symmetric(mom, k)
    eigen_ok, _ = eigen_residuals(cert, M)
    eigen_ok = eigen_ok and lam == cert.lam
    weights_ok = sum(cert.weights) == 1 and all(w >= 0 for w in cert.weights)
    top, reduced_ok = _reduced_maximum(cert)
    identity_ok = polynomial_identity(cert) and reduced_ok
    gap = float(top - lam)
    passed = eigen_ok and weights_ok and identity_ok and top == lam
    return VerificationReport(lam, mult, True, float(top), [0.0] * k, gap, 0.0,
                              eigen_ok, weights_ok, identity_ok, "reduced", passed)


@dataclass(frozen=True)
class DualGap:
    primal: float
    dual: float
    gap: float
    trace_z: Fraction

    def __iter__(self):
        return iter((self.primal, self.dual, self.gap))


def dual_gap(design: Design, cert: ExtremalCertificate, grid_per_axis: int = 21) -> DualGap:
    """Primal ``lam_min(M(design))`` against dual ``max_x |f^T Z f|`` over grid and support."""
    if design.k != cert.k:
        raise InvalidArgument("design and certificate disagree on k")
    spec = ModelSpec(design.k)
    _, lam, _, _ = _mat_lambda(spec, design)
    trace_z = sum(cert.weights)
    if design.k > GRID_DIM_LIMIT:
        top, _ = _reduced_maximum(cert)
        dual = float(top)
    else:
        # P_Z = d >= 0, so max |P_Z| = max d
        dual, _ = _grid_maximize(cert, grid_per_axis,
                                 [[float(v) for v in p] for p in design.points])
    return DualGap(float(lam), dual, dual - float(lam), trace_z)
