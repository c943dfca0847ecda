"""E-optimal designs on the cube ``[-1, 1]^k``.

Symmetric designs are described by the masses they put on the barycenter
classes ``E_r`` (points with ``r`` zero coordinates and ``k - r`` coordinates
equal to ``+-1``).  A class of depth ``r`` contributes ``(k-r)/k`` to the moment
``a = c`` and ``(k-r)(k-r-1)/(k(k-1))`` to ``b`` per unit mass, so an E-optimal
design is any nonnegative mass vector with ``a = 2/5`` and ``b = 1/5``.
All arithmetic here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Sequence

from .design import Design, SymmetricMoments, expand_weights
from .errors import InvalidArgument, SingularityError
from .exact import fmt, solve_exact

__all__ = [
    "OPTIMAL_A",
    "OPTIMAL_B",
    "LAMBDA_MIN",
    "BarycenterClass",
    "TripleSolution",
    "barycenter_points",
    "class_coefficients",
    "solve_triple",
    "solve_pair",
    "closed_form_mass",
    "enumerate_feasible_triples",
    "diophantine_pairs",
    "minimal_support_design",
    "support_count",
    "conjecture_design",
    "expand_design",
]

OPTIMAL_A = Fraction(2, 5)
OPTIMAL_B = Fraction(1, 5)
LAMBDA_MIN = Fraction(1, 5)


def _check_depth(k: int, r: int):
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    if not 0 <= r <= k:
        raise InvalidArgument(f"depth {r} outside 0..{k}")


def barycenter_points(k: int, r: int) -> list[tuple[int, ...]]:
    """All points of ``E_r``: zero positions in lexicographic order, then signs (+ before -)."""
    _check_depth(k, r)
    out = []
    for zeros in combinations(range(k), r):
        free = [i for i in range(k) if i not in zeros]
        for signs in product((1, -1), repeat=k - r):
            x = [0] * k
            for i, s in zip(free, signs):
                x[i] = s
            out.append(tuple(x))
    return out


@dataclass(frozen=True)
class BarycenterClass:
    k: int
    r: int

    def __post_init__(self):
        _check_depth(self.k, self.r)

    @property
    def cardinality(self) -> int:
        return comb(self.k, self.r) * 2 ** (self.k - self.r)

    @property
    def a_count(self) -> int:
        """Points of ``E_r`` with ``x_1 != 0``."""
        return comb(self.k - 1, self.r) * 2 ** (self.k - self.r)

    @property
    def b_count(self) -> int:
        """Points of ``E_r`` with ``x_1 x_2 != 0``."""
        if self.k < 2:
            return 0
        return comb(self.k - 2, self.r) * 2 ** (self.k - self.r)

    def points(self) -> list[tuple[int, ...]]:
        return barycenter_points(self.k, self.r)


def class_coefficients(k: int, r: int) -> tuple[Fraction, Fraction]:
    """Contribution of unit mass on ``E_r`` to the moments ``a`` (= ``c``) and ``b``."""
    _check_depth(k, r)
    a = Fraction(k - r, k)
    b = Fraction((k - r) * (k - r - 1), k * (k - 1)) if k > 1 else Fraction(0)
    return a, b


def support_count(k: int, depths: Sequence[int]) -> int:
    """``N = sum_i C(k, r_i) 2^(k - r_i)``."""
    for r in depths:
        _check_depth(k, r)
    return sum(comb(k, r) * 2 ** (k - r) for r in depths)


@dataclass(frozen=True)
class TripleSolution:
    """Masses on barycenter classes; zero masses are allowed and ignored for support."""

    k: int
    depths: tuple[int, ...]
    masses: tuple[Fraction, ...]

    @property
    def support_depths(self) -> tuple[int, ...]:
        return tuple(r for r, w in zip(self.depths, self.masses) if w > 0)

    @property
    def support_masses(self) -> tuple[Fraction, ...]:
        return tuple(w for w in self.masses if w > 0)

    @cached_property
    def support_count(self) -> int:
        return support_count(self.k, self.support_depths)

    @property
    def N(self) -> int:
        return self.support_count

    def moments(self) -> SymmetricMoments:
        a = b = Fraction(0)
        for r, w in zip(self.depths, self.masses):
            ar, br = class_coefficients(self.k, r)
            a += w * ar
            b += w * br
        # on {-1, 0, 1} x^4 = x^2, so c = a
        return SymmetricMoments(a, b if self.k > 1 else None, a)

    def is_optimal(self) -> bool:
        mom = self.moments()
        ok_b = self.k == 1 or mom.b == OPTIMAL_B
        return (sum(self.masses) == 1 and all(w >= 0 for w in self.masses)
                and mom.a == OPTIMAL_A and ok_b)

    def __str__(self):
        parts = ", ".join(f"E{r}: {fmt(w)}" for r, w in zip(self.depths, self.masses))
        return f"k={self.k} [{parts}] N={self.support_count}"


def _rhs(k):
    return [Fraction(1), OPTIMAL_A, OPTIMAL_B][: (3 if k > 1 else 2)]


def solve_triple(k: int, r1: int, r2: int, r3: int) -> TripleSolution | None:
    """Exact solution of the 3x3 moment system on ``E_r1, E_r2, E_r3``; ``None`` if any mass < 0."""
    depths = (r1, r2, r3)
    for r in depths:
        _check_depth(k, r)
    if not r1 < r2 < r3:
        raise InvalidArgument("depths must satisfy r1 < r2 < r3")
    A = [[Fraction(1)] * 3,
         [class_coefficients(k, r)[0] for r in depths],
         [class_coefficients(k, r)[1] for r in depths]]
    masses = tuple(solve_exact(A, _rhs(k)))
    if any(w < 0 for w in masses):
        return None
    return TripleSolution(k, depths, masses)


def solve_pair(k: int, s: int, t: int) -> TripleSolution | None:
    """Two-class solution, or ``None`` when inconsistent or negative."""
    _check_depth(k, s)
    _check_depth(k, t)
    if not s < t:
        raise InvalidArgument("depths must satisfy s < t")
    (a_s, b_s), (a_t, b_t) = class_coefficients(k, s), class_coefficients(k, t)
    try:
        ws, wt = solve_exact([[1, 1], [a_s, a_t]], [1, OPTIMAL_A])
    except SingularityError:
        return None
    if k > 1 and ws * b_s + wt * b_t != OPTIMAL_B:
        return None
    if ws < 0 or wt < 0:
        return None
    return TripleSolution(k, (s, t), (ws, wt))


def closed_form_mass(k: int, r: int, u: int, v: int) -> Fraction:
    """Mass on ``E_r`` when the other two classes are ``E_u`` and ``E_v``."""
    return Fraction(2 * k * k + k - 3 * k * (u + v) + 5 * u * v, 5 * (u - r) * (v - r))


def diophantine_pairs(k: int) -> list[tuple[int, int]]:
    """Integer solutions of ``2k^2 + k - 3k(s+t) + 5st = 0`` with ``0 <= s < t <= k``."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    return [(s, t) for s in range(k + 1) for t in range(s + 1, k + 1)
            if 2 * k * k + k - 3 * k * (s + t) + 5 * s * t == 0]


def _sort_key(sol: TripleSolution):
    return (sol.support_count, sol.support_depths)


def enumerate_feasible_triples(k: int) -> list[TripleSolution]:
    """Every two-class and strictly-positive three-class E-optimal design, sorted by ``(N, depths)``.

    A triple with a zero mass is the same design as a pair and is reported once,
    as the pair.
    """
    if k < 1:
        raise InvalidArgument("k must be positive")
    sols = []
    for s, t in combinations(range(k + 1), 2):
        sol = solve_pair(k, s, t)
        if sol is not None:
            sols.append(sol)
    if k >= 2:
        for rs in combinations(range(k + 1), 3):
            sol = solve_triple(k, *rs)
            if sol is not None and all(w > 0 for w in sol.masses):
                sols.append(sol)
    sols.sort(key=_sort_key)
    return sols


def minimal_support_design(k: int) -> TripleSolution:
    """The feasible design with fewest support points (ties: smallest depth tuple)."""
    sols = enumerate_feasible_triples(k)
    if not sols:
        raise InvalidArgument(f"no feasible barycenter design for k={k}")
    best = sols[0]
    return TripleSolution(k, best.support_depths, best.support_masses)


def _table2_params(k: int) -> tuple[int, int, int]:
    q = (k + 1) // 3
    l = k - 3 * q
    return q, l, 2 * q + l


def conjecture_design(k: int) -> TripleSolution:
    """The three-class pattern ``(E_0, E_s, E_k)``, ``k = 3q + l``, ``s = 2q + l``.

    For ``l = +1`` the mass on ``E_k`` is zero (a two-class design).  The
    result is checked to have moments ``a = 2/5, b = 1/5``.
    """
    if k < 1:
        raise InvalidArgument("k must be positive")
    if k == 3:
        raise InvalidArgument("the pattern does not cover k = 3")
    q, l, s = _table2_params(k)
    F = Fraction
    if l == 1:
        masses = (F(1, 5) * F(q + 2, 2 * q + 1), F(3, 5) * F(3 * q + 1, 2 * q + 1), F(0))
    elif l == 0:
        masses = (F(1, 5) * F(q + 1, 2 * q), F(3, 5) * F(3 * q - 1, 2 * q), F(1, 5 * q))
    else:
        masses = (F(1, 5) * F(q, 2 * q - 1),
                  F(1, 5) * F((3 * q - 1) * (3 * q - 2), q * (2 * q - 1)), F(2, 5 * q))
    sol = TripleSolution(k, (0, s, k), masses)
    if not sol.is_optimal():
        raise AssertionError(f"pattern masses for k={k} fail the moment equations")
    return sol


def expand_design(k: int, sol: TripleSolution) -> Design:
    """Explicit design: each class mass spread uniformly over its barycenters."""
    if sol.k != k:
        raise InvalidArgument("solution belongs to a different k")
    classes = [barycenter_points(k, r) for r in sol.depths]
    pts, ws = expand_weights(classes, sol.masses)
    return Design(pts, ws, "cube", k)
