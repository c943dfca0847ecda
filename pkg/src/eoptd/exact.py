"""Exact scalars and small dense linear algebra over the rationals.

Everything in the optimal designs of this package is rational except the
coordinates of the ball vertices (``±1/sqrt(k)``) and the discriminant root in
the closed-form spectrum.  Both live in a real quadratic field ``Q(sqrt(d))``,
so one tiny number type, :class:`Surd`, keeps all of those computations exact.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgument, SingularityError

__all__ = [
    "Surd",
    "sqrt_exact",
    "inv_sqrt",
    "to_exact",
    "is_exact",
    "fmt",
    "solve_exact",
    "det_bareiss",
    "psd_nullity",
    "rank_exact",
]


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree."""
    if n <= 0:
        raise InvalidArgument("squarefree split needs a positive integer")
    s, d = 1, 1
    p = 2
    while p * p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    # what is left has at most two prime factors, all larger than the cube root
    r = math.isqrt(n)
    if r * r == n:
        s *= r
    else:
        d *= n
    return s, d


class Surd:
    """A real number ``a + b*sqrt(d)`` with rational ``a, b`` and squarefree ``d > 1``.

    Instances are only created with ``b != 0``; anything rational collapses to
    :class:`fractions.Fraction` through :meth:`make`.  Arithmetic with a
    ``Fraction``/``int`` stays exact, arithmetic with a ``float`` degrades to
    ``float``.  Two surds with different radicands cannot be added or
    multiplied (that would leave the field).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    @classmethod
    def make(cls, a, b, d: int):
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            return a
        s, d = _squarefree_split(int(d))
        if d == 1:
            return a + b * s
        return cls(a, b * s, d)

    # -- conversions ---------------------------------------------------
    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self) -> str:
        return f"Surd({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        return fmt(self)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- field operations ------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.d != self.d:
                raise InvalidArgument(
                    f"cannot combine sqrt({self.d}) and sqrt({other.d}) exactly")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return Surd.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, float):
            return float(self) - other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return Surd.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        return Surd.make(self.a * x + self.b * y * self.d,
                         self.a * y + self.b * x, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return Surd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - d b^2``; zero only for zero."""
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        if isinstance(other, float):
            return float(self) / other
        if isinstance(other, (int, Fraction)):
            return Surd.make(self.a / other, self.b / other, self.d)
        if isinstance(other, Surd):
            return self * other.conjugate() / other.norm()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        if isinstance(other, (int, Fraction)):
            return Fraction(other) * self.conjugate() / self.norm()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return float(self) ** n
        out = Fraction(1)
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- ordering ------------------------------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with d b^2
        big = a * a - self.d * b * b
        return (1 if a > 0 else -1) * (1 if big > 0 else -1)

    def _cmp(self, other) -> int:
        if isinstance(other, float):
            f = float(self)
            return (f > other) - (f < other)
        diff = self - other
        if isinstance(diff, Surd):
            return diff.sign()
        return (diff > 0) - (diff < 0)

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, float):
            return float(self) == other
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def sqrt_exact(q):
    """Square root of a nonnegative rational, as ``Fraction`` when possible."""
    if isinstance(q, float):
        return math.sqrt(q)
    q = Fraction(q)
    if q < 0:
        raise InvalidArgument("square root of a negative number")
    if q == 0:
        return Fraction(0)
    # sqrt(n/m) = sqrt(n*m)/m
    n, m = q.numerator, q.denominator
    s, d = _squarefree_split(n * m)
    if d == 1:
        return Fraction(s, m)
    return Surd(0, Fraction(s, m), d)


def inv_sqrt(k: int):
    """``1/sqrt(k)`` exactly."""
    return sqrt_exact(Fraction(1, k))


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, Surd)) and not isinstance(x, bool)


def to_exact(x):
    """Coerce ints, ``"p/q"`` strings and Fractions to ``Fraction``; keep surds/floats."""
    if isinstance(x, bool):
        raise InvalidArgument("booleans are not numbers here")
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, np.integer):
        return Fraction(int(x))
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise InvalidArgument(f"unsupported scalar {x!r}")


def fmt(x) -> str:
    """Render exact values as ``p/q`` (or ``a + b*sqrt(d)``), floats with repr."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Surd):
        root = f"sqrt({x.d})" if abs(x.b) == 1 else f"{abs(x.b)}*sqrt({x.d})"
        if x.a == 0:
            return ("-" if x.b < 0 else "") + root
        return f"{x.a} {'-' if x.b < 0 else '+'} {root}"
    return repr(float(x))


# ---------------------------------------------------------------------------
# exact dense linear algebra (entries: Fraction, or Surd of one radicand)


def _matrix(rows) -> list[list]:
    return [[to_exact(v) for v in row] for row in rows]


def solve_exact(A: Sequence[Sequence], b: Sequence):
    """Solve the square system ``A x = b`` by Gauss-Jordan elimination.

    Raises :class:`SingularityError` when ``A`` is singular.
    """
    M = _matrix(A)
    n = len(M)
    if any(len(r) != n for r in M) or len(b) != n:
        raise InvalidArgument("solve_exact needs a square system")
    aug = [row + [to_exact(v)] for row, v in zip(M, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise SingularityError("singular linear system")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [u - f * v for u, v in zip(aug[i], aug[c])]
    return [row[n] for row in aug]


def det_bareiss(A) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = _matrix(A)
    n = len(M)
    if n == 0:
        return Fraction(1)
    # clear denominators so Bareiss stays in the integers
    den = 1
    for row in M:
        for v in row:
            if not isinstance(v, Fraction):
                raise InvalidArgument("det_bareiss works over the rationals")
            den = den * v.denominator // math.gcd(den, v.denominator)
    Z = [[int(v * den) for v in row] for row in M]
    sign, prev = 1, 1
    for c in range(n - 1):
        if Z[c][c] == 0:
            p = next((i for i in range(c + 1, n) if Z[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            Z[c], Z[p] = Z[p], Z[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                Z[i][j] = (Z[i][j] * Z[c][c] - Z[i][c] * Z[c][j]) // prev
        prev = Z[c][c]
    return Fraction(sign * Z[n - 1][n - 1], den ** n)


def psd_nullity(A) -> int | None:
    """Nullity of a symmetric exact matrix if it is positive semidefinite, else ``None``.

    Symmetric elimination without pivoting: a negative pivot proves
    indefiniteness, a zero pivot forces its whole remaining row to vanish.
    The sparse row update keeps structured information matrices cheap.
    """
    M = np.array(A, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise InvalidArgument("psd_nullity needs a square matrix")
    nullity = 0
    for i in range(n):
        piv = M[i, i]
        rest = M[i, i + 1:]
        nz = [j for j, v in enumerate(rest, start=i + 1) if v != 0]
        if piv == 0:
            if nz:
                return None
            nullity += 1
            continue
        if piv < 0:
            return None
        row = M[i, i + 1:]
        for j in nz:
            f = M[j, i] / piv
            M[j, i + 1:] = M[j, i + 1:] - f * row
    return nullity


def rank_exact(A) -> int:
    """Rank of an exact (possibly rectangular) matrix."""
    M = [list(r) for r in _matrix(A)]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, rows):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [u - f * v for u, v in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r
