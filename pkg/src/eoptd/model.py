"""The second-order response surface model in ``k`` predictors.

The regression vector uses one fixed ordering everywhere in the package::

    f(x) = (1, x_1^2, ..., x_k^2, x_1, ..., x_k, x_1 x_2, x_1 x_3, ..., x_{k-1} x_k)

so the information matrix of a symmetric design has the block form
``[[1, a 1^T], [a 1, H]] (+) a I_k (+) b I_{k(k-1)/2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import InvalidArgument

__all__ = ["ModelSpec", "regression_vector", "monomial_exponents"]


@dataclass(frozen=True)
class ModelSpec:
    """Dimension bookkeeping for the quadratic model with ``k`` predictors."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise InvalidArgument(f"k must be a positive integer, got {self.k!r}")

    @property
    def m(self) -> int:
        return (self.k + 1) * (self.k + 2) // 2

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Cross-term index pairs ``(i, j)``, ``i < j``, in lexicographic order."""
        return tuple(combinations(range(self.k), 2))

    # slices of f(x) in the canonical ordering
    @property
    def square_slice(self) -> slice:
        return slice(1, self.k + 1)

    @property
    def linear_slice(self) -> slice:
        return slice(self.k + 1, 2 * self.k + 1)

    @property
    def cross_slice(self) -> slice:
        return slice(2 * self.k + 1, self.m)


def _spec(spec) -> ModelSpec:
    return spec if isinstance(spec, ModelSpec) else ModelSpec(int(spec))


def monomial_exponents(spec) -> list[tuple[int, ...]]:
    """Multi-indices of the entries of ``f(x)``, in regression-vector order."""
    spec = _spec(spec)
    k = spec.k

    def unit(*idx):
        e = [0] * k
        for i in idx:
            e[i] += 1
        return tuple(e)

    out = [tuple([0] * k)]
    out += [unit(i, i) for i in range(k)]
    out += [unit(i) for i in range(k)]
    out += [unit(i, j) for i, j in spec.pairs]
    return out


def regression_vector(spec, x: Sequence) -> list:
    """Evaluate ``f(x)``.

    Works for any scalar type closed under ``*`` (ints, Fractions, surds,
    floats); the result keeps the input's exactness.
    """
    spec = _spec(spec)
    x = list(x)
    if len(x) != spec.k:
        raise InvalidArgument(f"expected a point of length {spec.k}, got {len(x)}")
    one = 1.0 if any(isinstance(v, float) for v in x) else 1
    out = [one]
    out += [v * v for v in x]
    out += x
    out += [x[i] * x[j] for i, j in spec.pairs]
    return out
