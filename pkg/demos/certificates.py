"""Optimality certificates: the extremal polynomial never exceeds lambda_min."""

from eoptd.ball import optimal_ball_design
from eoptd.certify import (ball_certificate, cube_certificate, dual_gap, evaluate_extremal,
                           evaluate_extremal_many, random_points, verify_design, verify_optimal)
from eoptd.cube import expand_design, minimal_support_design
from eoptd.exact import fmt

k = 3
cert = cube_certificate(k)
print("certificate weights", [fmt(w) for w in cert.weights])

# d(x) = lambda (1 - (4/k) sum x_i^2 (1 - x_i^2)) on the cube
for x in [(0, 0, 0), (1, 0, -1), (0.5, 0.5, 0.5)]:
    print(x, fmt(evaluate_extremal(cert, x)), fmt(cert.closed_form(x)))

X = random_points("cube", k, 5000, seed=1)
print("max over random points", evaluate_extremal_many(cert, X).max())

d = expand_design(k, minimal_support_design(k))
rep = verify_design(k, d, cert, grid_per_axis=41)
print(rep.to_json())

gap = dual_gap(optimal_ball_design(k), ball_certificate(k))
print("ball primal", gap.primal, "dual", gap.dual, "gap", gap.gap)

# Past six dimensions the grid is replaced by an exact one-dimensional check.
for k in (8, 16, 24):
    print(k, verify_optimal("cube", k).passed, verify_optimal("ball", k).passed)
