import math
from fractions import Fraction

from eoptd.design import SymmetricMoments


def random_moments(rng, k, exact=False, rotatable=None):
    """Random ``(a, b, c)`` with ``1 >= a >= c > b > 0`` and ``c + (k-1) b > k a^2``.

    ``rotatable=True`` forces ``c = 3b``, ``False`` keeps ``|c - 3b|`` away from zero.
    """
    while True:
        b = rng.uniform(0.01, 0.3)
        c = 3 * b if rotatable else rng.uniform(b + 0.01, 1.0)
        if rotatable is False and abs(c - 3 * b) < 0.05:
            continue
        hi = min(1.0, math.sqrt((c + (k - 1) * b) / k))
        if hi <= c or c >= 1:
            continue
        a = rng.uniform(c, hi)
        if not (c + (k - 1) * b > k * a * a):
            continue
        if exact:
            a, b, c = (Fraction(v).limit_denominator(1000) for v in (a, b, c))
            if rotatable:
                c = 3 * b
            if not (1 >= a >= c > b > 0 and c + (k - 1) * b > k * a * a):
                continue
        return SymmetricMoments(a, b if k > 1 else None, c)
