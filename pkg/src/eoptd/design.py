"""Approximate designs, information matrices and symmetric moments.

An approximate design is a probability measure with finite support.  Exact
designs (rational or ``Q(sqrt(d))`` coordinates, rational weights) produce
exact information matrices; any float anywhere switches to a float64 path.

The exact path never multiplies ``Fraction`` objects point by point.  Points
are lifted to integers over a common denominator ``L`` (and a common radicand
``d``), the Gram matrix is formed with integer numpy arithmetic, and only the
``m x m`` result is turned back into ``Fraction``/``Surd`` entries.
"""

from __future__ import annotations

import json
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, SymmetryViolation
from .exact import Surd, fmt, inv_sqrt, is_exact, to_exact
from .model import ModelSpec, _spec

__all__ = [
    "Design",
    "SymmetricMoments",
    "InfoMatrix",
    "SymmetryCheck",
    "information_matrix",
    "symmetric_info_matrix",
    "moments_of",
    "moment",
    "is_symmetric",
    "determinant_symmetric",
    "check_moment_inequalities",
    "design_to_dict",
    "design_from_dict",
    "dump_design",
    "load_design",
]

SPACES = ("cube", "ball")
FLOAT_SUM_TOL = 1e-12


class Design:
    """Finite probability measure on the cube ``[-1,1]^k`` or the unit ball.

    Duplicate support points are merged (weights summed) with a warning.
    """

    def __init__(self, points: Iterable[Sequence], weights: Iterable, space: str = "cube",
                 k: int | None = None):
        if space not in SPACES:
            raise InvalidArgument(f"space must be one of {SPACES}, got {space!r}")
        pts = [tuple(to_exact(v) for v in p) for p in points]
        ws = [to_exact(w) for w in weights]
        if any(isinstance(w, Surd) for w in ws):
            raise InvalidArgument("exact weights must be rational")
        if len(pts) != len(ws):
            raise InvalidArgument("points and weights differ in length")
        if not pts:
            raise InvalidArgument("a design needs at least one support point")
        if k is None:
            k = len(pts[0])
        if any(len(p) != k for p in pts):
            raise InvalidArgument(f"all points must have length {k}")
        self.k = k
        self.space = space

        exact = all(is_exact(w) for w in ws) and all(is_exact(v) for p in pts for v in p)
        if not exact:
            pts = [tuple(float(v) for v in p) for p in pts]
            ws = [float(w) for w in ws]
        self.exact = exact

        merged: dict[tuple, object] = {}
        for p, w in zip(pts, ws):
            if p in merged:
                merged[p] = merged[p] + w
            else:
                merged[p] = w
        if len(merged) < len(pts):
            warnings.warn(f"merged {len(pts) - len(merged)} duplicate support point(s)",
                          stacklevel=2)
        self.points = tuple(merged)
        self.weights = tuple(merged.values())

        if any(w < 0 for w in self.weights):
            raise InvalidArgument("weights must be nonnegative")
        total = sum(self.weights)
        if exact and total != 1:
            raise InvalidArgument(f"weights sum to {total}, not 1")
        if not exact and abs(total - 1.0) > FLOAT_SUM_TOL:
            raise InvalidArgument(f"weights sum to {total!r}, not 1")
        squares = {} if exact else None
        for p in self.points:
            if not _in_space(p, space, exact, squares):
                raise InvalidArgument(f"point {tuple(map(fmt, p))} is outside the {space}")

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Design(k={self.k}, space={self.space!r}, n={len(self)}, exact={self.exact})"

    def to_float(self) -> "Design":
        return Design([[float(v) for v in p] for p in self.points],
                      [float(w) for w in self.weights], self.space, self.k)

    def point_array(self) -> np.ndarray:
        return np.array([[float(v) for v in p] for p in self.points], dtype=float)

    def weight_array(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights], dtype=float)


def _in_space(p, space, exact, squares=None) -> bool:
    if space == "cube":
        return all(abs(v) <= 1 for v in p) if exact else all(abs(v) <= 1 + 1e-12 for v in p)
    if squares is None:
        r2 = sum(v * v for v in p)
    else:
        # exact squaring is slow, so repeated coordinate values share one result
        r2 = 0
        for v in p:
            if v not in squares:
                squares[v] = v * v
            r2 += squares[v]
    return r2 <= 1 if exact else r2 <= 1 + 1e-12


@dataclass(frozen=True)
class SymmetricMoments:
    """The moments ``a = E x1^2``, ``b = E x1^2 x2^2`` and ``c = E x1^4``.

    ``b`` is ``None`` for ``k = 1`` where no cross moment exists.
    """

    a: object
    b: object
    c: object

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def to_float(self) -> "SymmetricMoments":
        return SymmetricMoments(float(self.a), None if self.b is None else float(self.b),
                                float(self.c))

    def __str__(self):
        b = "--" if self.b is None else fmt(self.b)
        return f"(a={fmt(self.a)}, b={b}, c={fmt(self.c)})"


@dataclass(frozen=True, eq=False)
class InfoMatrix:
    """An ``m x m`` information matrix; ``entries`` is object-dtype when exact."""

    entries: np.ndarray
    spec: ModelSpec

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def exact(self) -> bool:
        return self.entries.dtype == object

    def to_float(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def __array__(self, dtype=None, copy=None):
        return self.to_float() if dtype is None else self.to_float().astype(dtype)

    def trace(self):
        return sum(self.entries[i, i] for i in range(self.m))

    def __eq__(self, other):
        if not isinstance(other, InfoMatrix):
            return NotImplemented
        return self.m == other.m and bool(np.all(self.entries == other.entries))

    __hash__ = None


# ---------------------------------------------------------------------------
# integer lifting for exact arithmetic


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class _Lifted:
    """Points written as ``(P + Q sqrt(d)) / L`` with integer arrays ``P, Q``."""

    def __init__(self, design: Design):
        radicands = {v.d for p in design.points for v in p if isinstance(v, Surd)}
        if len(radicands) > 1:
            raise InvalidArgument(f"coordinates mix radicands {sorted(radicands)}")
        self.d = radicands.pop() if radicands else 1
        L = 1
        for p in design.points:
            for v in p:
                if isinstance(v, Surd):
                    L = _lcm(_lcm(L, v.a.denominator), v.b.denominator)
                else:
                    L = _lcm(L, v.denominator)
        self.L = L
        P = [[int(_rat(v) * L) for v in p] for p in design.points]
        Q = [[int(_irr(v) * L) for v in p] for p in design.points]
        Wd = 1
        for w in design.weights:
            Wd = _lcm(Wd, w.denominator)
        self.Wd = Wd
        W = [int(w * Wd) for w in design.weights]
        n = len(design.points)
        # bound on |monomial pair| of degree 4, times total weight
        B = max([abs(v) for row in P + Q for v in row] + [L, 1])
        bound = ((1 + self.d) * B) ** 4 * (1 + self.d) * max(W) * n * 4
        self.dtype = np.int64 if bound < 2 ** 62 else object
        self.P = np.array(P, dtype=self.dtype).reshape(n, design.k)
        self.Q = np.array(Q, dtype=self.dtype).reshape(n, design.k)
        self.W = np.array(W, dtype=self.dtype)

    def mul(self, x, y):
        (a1, b1), (a2, b2) = x, y
        return a1 * a2 + self.d * b1 * b2, a1 * b2 + b1 * a2

    def coord(self, i):
        return self.P[:, i], self.Q[:, i]

    def value(self, num_a, num_b, den):
        """``(num_a + num_b sqrt(d)) / den`` as an exact scalar."""
        if self.d == 1:
            return Fraction(int(num_a) + int(num_b), den)
        return Surd.make(Fraction(int(num_a), den), Fraction(int(num_b), den), self.d)


def _rat(v):
    return v.a if isinstance(v, Surd) else v


def _irr(v):
    return v.b if isinstance(v, Surd) else Fraction(0)


def _lifted_features(lift: _Lifted, spec: ModelSpec):
    """Integer arrays ``FA, FB`` with ``f(x) = (FA + FB sqrt(d)) / L^2``."""
    n = lift.P.shape[0]
    L = lift.L
    cols_a, cols_b = [], []
    one = np.full(n, L * L, dtype=lift.dtype)
    cols_a.append(one)
    cols_b.append(np.zeros(n, dtype=lift.dtype))
    for i in range(spec.k):
        a, b = lift.mul(lift.coord(i), lift.coord(i))
        cols_a.append(a)
        cols_b.append(b)
    for i in range(spec.k):
        a, b = lift.coord(i)
        cols_a.append(a * L)
        cols_b.append(b * L)
    for i, j in spec.pairs:
        a, b = lift.mul(lift.coord(i), lift.coord(j))
        cols_a.append(a)
        cols_b.append(b)
    return np.stack(cols_a, axis=1), np.stack(cols_b, axis=1)


def _float_features(points: np.ndarray, spec: ModelSpec) -> np.ndarray:
    n = points.shape[0]
    cols = [np.ones(n), points ** 2, points]
    if spec.k > 1:
        i, j = np.array(spec.pairs).T
        cols.append(points[:, i] * points[:, j])
    return np.column_stack(cols)


def feature_matrix(spec, points) -> np.ndarray:
    """Float matrix whose rows are ``f(x)`` for each row ``x`` of ``points``."""
    spec = _spec(spec)
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != spec.k:
        raise InvalidArgument(f"points must have {spec.k} columns")
    return _float_features(pts, spec)


# ---------------------------------------------------------------------------


def _check_dims(spec: ModelSpec, design: Design):
    if design.k != spec.k:
        raise InvalidArgument(f"design has k={design.k}, model has k={spec.k}")


def information_matrix(spec, design: Design) -> InfoMatrix:
    """``M = sum_i w_i f(x_i) f(x_i)^T``; exact whenever the design is."""
    spec = _spec(spec)
    _check_dims(spec, design)
    if not design.exact:
        F = _float_features(design.point_array(), spec)
        w = design.weight_array()
        return InfoMatrix(F.T @ (w[:, None] * F), spec)

    lift = _Lifted(design)
    FA, FB = _lifted_features(lift, spec)
    WA = lift.W[:, None] * FA
    GAA = FA.T @ WA
    den = lift.Wd * lift.L ** 4
    m = spec.m
    out = np.empty((m, m), dtype=object)
    if lift.d == 1:
        G = GAA
        for i in range(m):
            for j in range(m):
                out[i, j] = Fraction(int(G[i, j]), den)
        return InfoMatrix(out, spec)
    WB = lift.W[:, None] * FB
    rat = GAA + lift.d * (FB.T @ WB)
    irr = FA.T @ WB + FB.T @ WA
    for i in range(m):
        for j in range(m):
            out[i, j] = lift.value(rat[i, j], irr[i, j], den)
    return InfoMatrix(out, spec)


def symmetric_info_matrix(spec, mom: SymmetricMoments) -> InfoMatrix:
    """Block-structured matrix of a symmetric design from its moments ``(a, b, c)``."""
    spec = _spec(spec)
    k, m = spec.k, spec.m
    a, c = mom.a, mom.c
    b = mom.b if mom.b is not None else 0
    exact = all(is_exact(v) for v in (a, b, c))
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)
    M = np.full((m, m), zero, dtype=object)
    M[0, 0] = one
    for i in range(1, k + 1):
        M[0, i] = M[i, 0] = a
        for j in range(1, k + 1):
            M[i, j] = c if i == j else b
    for i in range(k + 1, 2 * k + 1):
        M[i, i] = a
    for i in range(2 * k + 1, m):
        M[i, i] = b
    if not exact:
        M = M.astype(float)
    return InfoMatrix(M, spec)


# ---------------------------------------------------------------------------
# moments of degree <= 4


def _mono_name(combo: tuple[int, ...]) -> str:
    if not combo:
        return "1"
    counts: dict[int, int] = defaultdict(int)
    for i in combo:
        counts[i] += 1
    return " ".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in sorted(counts.items()))


def _signature(combo: tuple[int, ...]) -> tuple[int, ...]:
    counts: dict[int, int] = defaultdict(int)
    for i in combo:
        counts[i] += 1
    return tuple(sorted(counts.values(), reverse=True))


def _all_moments(design: Design, max_degree: int = 4) -> dict[tuple[int, ...], object]:
    """Map each monomial (as a sorted index tuple) of degree <= max_degree to its moment."""
    k = design.k
    out: dict[tuple[int, ...], object] = {}
    if not design.exact:
        X = design.point_array()
        w = design.weight_array()
        cache = {(): np.ones(len(w))}
        for deg in range(max_degree + 1):
            for combo in combinations_with_replacement(range(k), deg):
                if combo:
                    cache[combo] = cache[combo[:-1]] * X[:, combo[-1]]
                out[combo] = float(w @ cache[combo])
        return out
    lift = _Lifted(design)
    n = len(design)
    cache = {(): (np.ones(n, dtype=lift.dtype), np.zeros(n, dtype=lift.dtype))}
    for deg in range(max_degree + 1):
        den = lift.Wd * lift.L ** deg
        for combo in combinations_with_replacement(range(k), deg):
            if combo:
                cache[combo] = lift.mul(cache[combo[:-1]], lift.coord(combo[-1]))
            a, b = cache[combo]
            out[combo] = lift.value((lift.W * a).sum(), (lift.W * b).sum(), den)
    return out


def moment(design: Design, exponents: Sequence[int]):
    """``integral of x^alpha d(xi)`` for a single multi-index ``alpha``."""
    if len(exponents) != design.k:
        raise InvalidArgument("exponent vector has the wrong length")
    total = Fraction(0) if design.exact else 0.0
    for p, w in zip(design.points, design.weights):
        term = w
        for v, e in zip(p, exponents):
            for _ in range(e):
                term = term * v
        total = total + term
    return total


@dataclass(frozen=True)
class SymmetryCheck:
    ok: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.ok


def is_symmetric(spec, design: Design, tol: float = 1e-12) -> SymmetryCheck:
    """Check permutation invariance and vanishing odd moments up to degree 4.

    Every product ``f_alpha f_beta`` of two regression functions is a monomial
    of degree at most 4, and all of them are enumerated.  Exact designs are
    compared exactly and ``tol`` is ignored.
    """
    spec = _spec(spec)
    _check_dims(spec, design)
    moms = _all_moments(design)
    reference: dict[tuple[int, ...], tuple] = {}
    for combo, val in moms.items():
        sig = _signature(combo)
        if any(e % 2 for e in sig):
            if (val != 0) if design.exact else abs(val) > tol:
                return SymmetryCheck(
                    False, f"odd moment ∫{_mono_name(combo)} dξ = {fmt(val)} ≠ 0")
            continue
        if sig not in reference:
            reference[sig] = (combo, val)
            continue
        ref_combo, ref = reference[sig]
        differ = (val != ref) if design.exact else abs(val - ref) > tol
        if differ:
            return SymmetryCheck(
                False,
                f"moment ∫{_mono_name(combo)} dξ = {fmt(val)} differs from "
                f"∫{_mono_name(ref_combo)} dξ = {fmt(ref)}")
    return SymmetryCheck(True)


def moments_of(spec, design: Design, tol: float = 1e-12) -> SymmetricMoments:
    """``(a, b, c)`` of a symmetric design; raises :class:`SymmetryViolation` otherwise."""
    spec = _spec(spec)
    check = is_symmetric(spec, design, tol)
    if not check:
        raise SymmetryViolation(check.diagnostic)
    k = spec.k
    sq = [0] * k
    sq[0] = 2
    a = moment(design, sq)
    sq[0] = 4
    c = moment(design, sq)
    b = None
    if k >= 2:
        sq = [0] * k
        sq[0] = sq[1] = 2
        b = moment(design, sq)
    return SymmetricMoments(a, b, c)


def determinant_symmetric(spec, mom: SymmetricMoments):
    """``det M = a^k b^(k(k-1)/2) (c-b)^(k-1) [c + (k-1) b - k a^2]``."""
    spec = _spec(spec)
    k = spec.k
    a, c = mom.a, mom.c
    b = mom.b if mom.b is not None else 0
    return a ** k * b ** (k * (k - 1) // 2) * (c - b) ** (k - 1) * (c + (k - 1) * b - k * a * a)


def check_moment_inequalities(mom: SymmetricMoments, k: int) -> bool:
    """``1 >= a >= c > b > 0`` and ``c + b(k-1) > k a^2``; for ``k = 1`` only ``1 >= a >= c > a^2``."""
    a, b, c = mom.a, mom.b, mom.c
    if k == 1 or b is None:
        return 1 >= a >= c > 0 and c > a * a
    return 1 >= a >= c > b > 0 and c + b * (k - 1) > k * a * a


# ---------------------------------------------------------------------------
# JSON


def _coord_to_json(v, k):
    if isinstance(v, Surd):
        unit = inv_sqrt(k)
        if isinstance(unit, Surd) and v in (unit, -unit):
            return {"sign": 1 if v > 0 else -1, "inv_sqrt_k": True, "value": float(v)}
        raise InvalidArgument(f"cannot serialize coordinate {fmt(v)}")
    if isinstance(v, float):
        return v
    return str(v)


def _coord_from_json(v, k):
    if isinstance(v, dict):
        if not v.get("inv_sqrt_k"):
            raise InvalidArgument(f"unknown coordinate object {v!r}")
        sign = int(v.get("sign", 1))
        if sign not in (1, -1):
            raise InvalidArgument("sign must be +1 or -1")
        return sign * inv_sqrt(k)
    if isinstance(v, bool):
        raise InvalidArgument("booleans are not coordinates")
    if isinstance(v, (int, str)):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise InvalidArgument(f"unsupported coordinate {v!r}")


def design_to_dict(design: Design) -> dict:
    return {
        "k": design.k,
        "space": design.space,
        "points": [[_coord_to_json(v, design.k) for v in p] for p in design.points],
        "weights": [w if isinstance(w, float) else str(w) for w in design.weights],
    }


def design_from_dict(obj: dict) -> Design:
    try:
        k = int(obj["k"])
        space = obj["space"]
        points = [[_coord_from_json(v, k) for v in p] for p in obj["points"]]
        weights = [w if isinstance(w, float) else Fraction(w) for w in obj["weights"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"malformed design JSON: {exc}") from exc
    return Design(points, weights, space, k)


def dump_design(design: Design, fp) -> None:
    json.dump(design_to_dict(design), fp, indent=1)
    fp.write("\n")


def load_design(fp) -> Design:
    try:
        obj = json.load(fp)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"design file is not valid JSON: {exc}") from exc
    return design_from_dict(obj)


def expand_weights(points_by_class: Sequence[Sequence], masses: Sequence) -> tuple[list, list]:
    """Spread each class mass uniformly over that class's points."""
    pts, ws = [], []
    for cls, mass in zip(points_by_class, masses):
        if mass == 0:
            continue
        share = mass / len(cls)
        pts.extend(cls)
        ws.extend([share] * len(cls))
    return pts, ws

