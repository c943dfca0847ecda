"""Eigenvalues of information matrices.

Two independent routes: the closed-form spectrum of the structured matrix of a
symmetric design, and a cyclic Jacobi eigensolver for arbitrary symmetric
matrices.  For exact matrices, :func:`matrix_lambda_min` turns a floating
candidate into a proof: ``M - lam I`` positive semidefinite and singular means
``lam`` is exactly the smallest eigenvalue, and the nullity is its
multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .design import InfoMatrix, SymmetricMoments
from .errors import ConvergenceError, InvalidArgument, SingularityError
from .exact import fmt, is_exact, psd_nullity, sqrt_exact

__all__ = [
    "Spectrum",
    "symmetric_spectrum",
    "lambda_min_symmetric",
    "phi_p",
    "eigen_sym",
    "numeric_spectrum",
    "matrix_lambda_min",
    "MERGE_TOL",
]

MERGE_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in ascending order with multiplicities."""

    eigenvalues: tuple[tuple[object, int], ...]

    @property
    def m(self) -> int:
        return sum(mult for _, mult in self.eigenvalues)

    @property
    def lambda_min(self):
        return self.eigenvalues[0]

    def multiset(self) -> list[float]:
        out = []
        for v, mult in self.eigenvalues:
            out += [float(v)] * mult
        return out

    def __str__(self):
        return "{" + ", ".join(f"{fmt(v)} (x{mult})" for v, mult in self.eigenvalues) + "}"


def _merge(pairs: Sequence[tuple[object, int]], exact: bool, tol: float) -> Spectrum:
    pairs = sorted(((v, mult) for v, mult in pairs if mult > 0), key=lambda t: t[0])
    merged: list[list] = []
    for v, mult in pairs:
        if merged:
            prev = merged[-1][0]
            same = (v == prev) if exact else abs(float(v) - float(prev)) <= tol
            if same:
                merged[-1][1] += mult
                continue
        merged.append([v, mult])
    return Spectrum(tuple((v, mult) for v, mult in merged))


def symmetric_spectrum(mom: SymmetricMoments, k: int, tol: float = MERGE_TOL) -> Spectrum:
    """Closed-form spectrum of the information matrix of a symmetric design.

    ``lam0, lam1 = (1 + c + (k-1) b +- sqrt(D)) / 2`` with
    ``D = (1 - c - (k-1) b)^2 + 4 k a^2``, then ``c - b`` (k-1 times),
    ``a`` (k times) and ``b`` (k(k-1)/2 times).  Exact inputs give exact
    values (``sqrt(D)`` as a surd when irrational).
    """
    a, c = mom.a, mom.c
    b = mom.b if (mom.b is not None and k > 1) else 0
    exact = all(is_exact(v) for v in (a, b, c))
    if exact:
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        one = Fraction(1)
        root = sqrt_exact
    else:
        a, b, c = float(a), float(b), float(c)
        one = 1.0
        root = math.sqrt
    s = one + c + (k - 1) * b
    D = (one - c - (k - 1) * b) ** 2 + 4 * k * a * a
    r = root(D)
    pairs = [
        ((s + r) / 2, 1),
        ((s - r) / 2, 1),
        (c - b, k - 1),
        (a, k),
        (b, k * (k - 1) // 2),
    ]
    return _merge(pairs, exact, tol)


def lambda_min_symmetric(mom: SymmetricMoments, k: int, tol: float = MERGE_TOL):
    """``(lambda_min, multiplicity)`` from the closed-form spectrum."""
    return symmetric_spectrum(mom, k, tol).lambda_min


def eigen_sym(M, tol: float = 1e-15, max_sweeps: int = 100):
    """Row-cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Returns ``(values, vectors)`` with eigenvectors in the columns, in the
    order they end up on the diagonal (not sorted).  Sweeps stop once the
    off-diagonal Frobenius norm drops below ``tol * ||M||_F``.
    """
    A = np.array(M, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape != (n, n):
        raise InvalidArgument("eigen_sym needs a square matrix")
    if n and np.max(np.abs(A - A.T)) > 1e-12 * max(1.0, np.max(np.abs(A))):
        raise InvalidArgument("matrix is not symmetric")
    A = (A + A.T) / 2
    V = np.eye(n)
    scale = np.linalg.norm(A)
    if n < 2 or scale == 0:
        return np.diag(A).copy(), V
    thresh = tol * scale
    for sweep in range(max_sweeps):
        off = math.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0))
        if off <= thresh:
            return np.diag(A).copy(), V
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                # below rounding level of both diagonal entries: drop it
                if sweep > 3 and abs(A[p, p]) + g == abs(A[p, p]) and abs(A[q, q]) + g == abs(A[q, q]):
                    A[p, q] = A[q, p] = 0.0
                    continue
                rotated = True
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        if not rotated:
            return np.diag(A).copy(), V
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def numeric_spectrum(M, tol: float = MERGE_TOL) -> Spectrum:
    values, _ = eigen_sym(M)
    return _merge([(float(v), 1) for v in values], False, tol)


def _entries(M):
    return M.entries if isinstance(M, InfoMatrix) else np.asarray(M)


def matrix_lambda_min(M, tol: float = MERGE_TOL, candidate=None):
    """``(lambda_min, multiplicity, exact)`` of a symmetric matrix.

    For exact matrices the value is certified exactly (see module docstring);
    the floating candidate comes from LAPACK and is snapped to nearby
    rationals.  If no candidate verifies (irrational minimum), the float
    answer is returned with ``exact = False``.
    """
    E = _entries(M)
    F = np.array(E, dtype=float)
    vals = np.linalg.eigvalsh((F + F.T) / 2)
    lo = float(vals[0])
    if E.dtype == object:
        n = E.shape[0]
        guesses = [candidate] if candidate is not None else []
        guesses += [Fraction(lo).limit_denominator(cap) for cap in (10 ** 3, 10 ** 6, 10 ** 9)]
        for lam in guesses:
            shifted = E.copy()
            for i in range(n):
                shifted[i, i] = shifted[i, i] - lam
            nullity = psd_nullity(shifted)
            if nullity:
                return lam, nullity, True
    mult = int(np.sum(np.abs(vals - lo) <= tol))
    return lo, mult, False


def phi_p(M, p: float) -> float:
    """Kiefer's criterion ``(trace(M^p) / m)^(1/p)`` for ``p`` in ``[-inf, 1]``.

    ``p = -inf`` is the E-criterion ``lambda_min`` and ``p = 0`` the
    geometric mean ``det(M)^(1/m)``.
    """
    if p > 1:
        raise InvalidArgument("p must lie in [-inf, 1]")
    values, _ = eigen_sym(_entries(M))
    values = np.clip(values, 0.0, None)
    lo = float(values.min())
    if p == -math.inf:
        return lo
    if p <= 0 and lo <= 1e-14 * max(1.0, float(values.max())):
        if p == 0:
            return 0.0
        raise SingularityError("Phi_p with p < 0 needs a nonsingular matrix")
    if p == 0:
        return float(np.exp(np.mean(np.log(values))))
    return float(np.mean(values ** p) ** (1.0 / p))
