"""E-optimal and rotatable designs on the unit ball.

The optimal design lives on three sets: the ``2^k`` vertices of the inscribed
cube (coordinates ``+-1/sqrt(k)``), the ``2k`` points ``+-e_i`` and the
origin.  Vertex coordinates are stored as exact surds, but every moment only
needs their squares ``1/k``, so all moments and eigenvalues stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .design import (Design, SymmetricMoments, expand_weights, information_matrix,
                     moments_of, symmetric_info_matrix)
from .errors import InvalidArgument, SingularityError
from .exact import inv_sqrt, is_exact, sqrt_exact
from .model import _spec, regression_vector
from .spectrum import lambda_min_symmetric

__all__ = [
    "BallSupportSets",
    "optimal_masses",
    "optimal_moments",
    "optimal_ball_design",
    "ball_moments",
    "lambda1_ball",
    "DispersionCoefficients",
    "dispersion_coefficients",
    "dispersion",
    "is_rotatable",
    "sphere_moments",
    "RotatableDesign",
    "rotatable_alpha",
    "rotatable_alpha_branches",
    "rotatable_optimal",
    "rotatable_gap",
    "random_orthogonal",
]


def _check_k(k):
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")


@dataclass(frozen=True)
class BallSupportSets:
    k: int

    def __post_init__(self):
        _check_k(self.k)

    @property
    def vertices(self) -> list[tuple]:
        """``F_0``: ``(+-1/sqrt(k), ..., +-1/sqrt(k))``."""
        u = inv_sqrt(self.k)
        pm = {1: u, -1: -u}
        return [tuple(pm[s] for s in signs) for signs in product((1, -1), repeat=self.k)]

    @property
    def face_centers(self) -> list[tuple]:
        """``F_{k-1}``: ``+-e_i``."""
        out = []
        for i in range(self.k):
            for s in (1, -1):
                x = [Fraction(0)] * self.k
                x[i] = Fraction(s)
                out.append(tuple(x))
        return out

    @property
    def center(self) -> list[tuple]:
        """``F_k``: the origin."""
        return [tuple([Fraction(0)] * self.k)]

    def all_points(self) -> list[tuple]:
        return self.vertices + self.face_centers + self.center


def optimal_masses(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Masses on ``(F_0, F_{k-1}, F_k)``: ``(k^2, k, k+2) / (k^2 + 2k + 2)``."""
    _check_k(k)
    K = k * k + 2 * k + 2
    return Fraction(k * k, K), Fraction(k, K), Fraction(k + 2, K)


def optimal_moments(k: int) -> SymmetricMoments:
    """``a = (k+1)/K``, ``b = 1/K``, ``c = 2/K`` with ``K = k^2 + 2k + 2``."""
    _check_k(k)
    K = k * k + 2 * k + 2
    return SymmetricMoments(Fraction(k + 1, K), Fraction(1, K) if k > 1 else None,
                            Fraction(2, K))


def optimal_ball_design(k: int) -> Design:
    """The E-optimal design on the unit ball, per-point mass = set mass / set size.

    For ``k = 1`` the vertex set and the face centers are both ``{-1, 1}``;
    their masses are pooled.
    """
    sets = BallSupportSets(k)
    m0, m1, m2 = optimal_masses(k)
    if k == 1:
        return Design([(Fraction(1),), (Fraction(-1),), (Fraction(0),)],
                      [(m0 + m1) / 2, (m0 + m1) / 2, m2], "ball", 1)
    pts, ws = expand_weights([sets.vertices, sets.face_centers, sets.center], [m0, m1, m2])
    return Design(pts, ws, "ball", k)


def ball_moments(k: int, mass_vertices, mass_faces) -> SymmetricMoments:
    """Moments of a symmetric design on ``F_0 u F_{k-1} u F_k``."""
    _check_k(k)
    if mass_vertices < 0 or mass_faces < 0 or mass_vertices + mass_faces > 1:
        raise InvalidArgument("masses must be nonnegative with sum <= 1")
    x0, x1 = mass_vertices, mass_faces
    if is_exact(x0) and is_exact(x1):
        x0, x1 = Fraction(x0), Fraction(x1)
    a = x0 / k + x1 / k
    b = x0 / k ** 2
    c = x0 / k ** 2 + x1 / k
    if k == 1:
        # vertices and face centers coincide at +-1
        return SymmetricMoments(a, None, c)
    return SymmetricMoments(a, b, c)


def lambda1_ball(a, k: int):
    """Small root ``(1 + a - sqrt((1-a)^2 + 4 k a^2)) / 2`` of the upper block, given ``c - b = a - k b``."""
    _check_k(k)
    if not 0 <= a <= 1:
        raise InvalidArgument("a must lie in [0, 1]")
    if is_exact(a):
        a = Fraction(a)
        return (1 + a - sqrt_exact((1 - a) ** 2 + 4 * k * a * a)) / 2
    return (1 + a - math.sqrt((1 - a) ** 2 + 4 * k * a * a)) / 2


# ---------------------------------------------------------------------------
# dispersion function


@dataclass(frozen=True)
class DispersionCoefficients:
    """Parameters of the inverse of the upper ``(k+1) x (k+1)`` block.

    ``M11^{-1} = [[kappa, q 1^T], [q 1, (d - e) I + e 1 1^T]]``.
    """

    k: int
    kappa: object
    q: object
    Q0: object
    e: object
    d: object

    def upper_inverse(self) -> np.ndarray:
        k = self.k
        out = np.empty((k + 1, k + 1), dtype=object)
        out[0, 0] = self.kappa
        out[0, 1:] = self.q
        out[1:, 0] = self.q
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                out[i, j] = self.d if i == j else self.e
        return out


def _moments_float_or_exact(mom: SymmetricMoments, k: int):
    a, b, c = mom.a, (mom.b if (k > 1 and mom.b is not None) else 0), mom.c
    if all(is_exact(v) for v in (a, b, c)):
        return Fraction(a), Fraction(b), Fraction(c)
    return float(a), float(b), float(c)


def dispersion_coefficients(mom: SymmetricMoments, k: int) -> DispersionCoefficients:
    _check_k(k)
    a, b, c = _moments_float_or_exact(mom, k)
    Q0 = c - b + (b - a * a) * k
    if Q0 == 0 or c == b or a <= 0 or (k > 1 and b <= 0):
        raise SingularityError("moments give a singular information matrix")
    kappa = (c + b * (k - 1)) / Q0
    q = -a / Q0
    e = (a * a - b) / ((c - b) * Q0)
    d = 1 / Q0 - e * (k - 1)
    return DispersionCoefficients(k, kappa, q, Q0, e, d)


def dispersion(spec, source, x, method: str = "closed") -> float:
    """``U(x) = f(x)^T M^{-1} f(x)`` for a design or a symmetric moment triple.

    ``method="closed"`` uses the radial expansion
    ``kappa + (1/a + 2q)|x|^2 + (1/(2b) + e)|x|^4 + (d - e - 1/(2b)) sum x_i^4``
    (moments only, or the moments of a symmetric design);
    ``method="direct"`` solves with the full information matrix.
    """
    spec = _spec(spec)
    k = spec.k
    xs = np.asarray([float(v) for v in x])
    if xs.shape != (k,):
        raise InvalidArgument(f"x must have length {k}")
    if method == "direct":
        if isinstance(source, Design):
            M = information_matrix(spec, source).to_float()
        else:
            M = symmetric_info_matrix(spec, source).to_float()
        f = np.array([float(v) for v in regression_vector(spec, list(xs))])
        try:
            return float(f @ np.linalg.solve(M, f))
        except np.linalg.LinAlgError as exc:
            raise SingularityError("singular information matrix") from exc
    if method != "closed":
        raise InvalidArgument("method must be 'closed' or 'direct'")
    if isinstance(source, Design):
        source = moments_of(spec, source)
    co = dispersion_coefficients(source, k)
    a, b, _ = (float(v) for v in _moments_float_or_exact(source, k))
    r2 = float(xs @ xs)
    quart = float(np.sum(xs ** 4))
    out = float(co.kappa) + (1 / a + 2 * float(co.q)) * r2
    if k == 1:
        return out + float(co.d) * quart
    return (out + (1 / (2 * b) + float(co.e)) * r2 * r2
            + (float(co.d) - float(co.e) - 1 / (2 * b)) * quart)


def is_rotatable(mom: SymmetricMoments, tol: float = 0.0) -> bool:
    """Rotatability of a symmetric design: ``c = 3b`` (exactly, for exact moments)."""
    if mom.b is None:
        return True
    gap = mom.c - 3 * mom.b
    if all(is_exact(v) for v in (mom.b, mom.c)):
        return abs(gap) <= tol if tol else gap == 0
    return abs(gap) <= tol


def sphere_moments(k: int, r=1) -> SymmetricMoments:
    """Moments of the uniform distribution on the sphere of radius ``r``."""
    _check_k(k)
    r2 = r * r
    if is_exact(r2):
        r2 = Fraction(r2)
    return SymmetricMoments(r2 / k, r2 * r2 / (k * (k + 2)) if k > 1 else None,
                            3 * r2 * r2 / (k * (k + 2)))


# ---------------------------------------------------------------------------
# rotatable benchmark


@dataclass(frozen=True)
class RotatableDesign:
    """``(1 - alpha) delta_0 + alpha Uniform(sphere of radius r)``, kept as moments."""

    k: int
    alpha: object
    radius: object
    moments: SymmetricMoments


def rotatable_alpha_branches(k: int, r2):
    """Both branches of the sphere-mass formula evaluated at ``r2`` (small-radius, large-radius)."""
    _check_k(k)
    if is_exact(r2):
        r2 = Fraction(r2)
    small = k * (k + 1) * (k + 2) / ((k + 1) * r2 * r2 + k * (k + 2) ** 2)
    large = k * (r2 - 1) / (r2 * (r2 + k - 1))
    return small, large


def rotatable_alpha(k: int, r2):
    """Mass on the sphere of squared radius ``r2`` in the E-optimal rotatable design."""
    small, large = rotatable_alpha_branches(k, r2)
    return small if r2 <= k + 2 else large


def rotatable_optimal(k: int, r=1) -> RotatableDesign:
    _check_k(k)
    if r <= 0:
        raise InvalidArgument("radius must be positive")
    r2 = r * r
    if is_exact(r2):
        r2 = Fraction(r2)
    alpha = rotatable_alpha(k, r2)
    sph = sphere_moments(k, r)
    b = None if sph.b is None else alpha * sph.b
    mom = SymmetricMoments(alpha * sph.a, b, alpha * sph.c)
    return RotatableDesign(k, alpha, r, mom)


def rotatable_gap(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(lambda_rot, lambda_opt, lambda_rot / lambda_opt)`` on the unit ball."""
    if not isinstance(k, int) or k < 2:
        raise InvalidArgument("rotatable_gap needs k >= 2")
    lam_rot = Fraction(k + 1, k ** 3 + 4 * k ** 2 + 5 * k + 1)
    lam_opt = Fraction(1, k * k + 2 * k + 2)
    return lam_rot, lam_opt, lam_rot / lam_opt


def rotatable_lambda_min(k: int, r=1):
    """``lambda_min`` of the rotatable design, from its moments."""
    return lambda_min_symmetric(rotatable_optimal(k, r).moments, k)[0]


def random_orthogonal(k: int, rng: np.random.Generator, n_rotations: int | None = None) -> np.ndarray:
    """Random orthogonal matrix built from composed Givens rotations (and maybe one reflection)."""
    O = np.eye(k)
    if k == 1:
        return O * rng.choice([-1.0, 1.0])
    for _ in range(n_rotations or 3 * k * k):
        i, j = rng.choice(k, size=2, replace=False)
        th = rng.uniform(0, 2 * math.pi)
        c, s = math.cos(th), math.sin(th)
        oi, oj = O[i].copy(), O[j].copy()
        O[i] = c * oi - s * oj
        O[j] = s * oi + c * oj
    if rng.random() < 0.5:
        O[0] = -O[0]
    return O
