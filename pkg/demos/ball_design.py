"""The E-optimal design on the unit ball and how it compares with rotatable designs."""

from eoptd.ball import (BallSupportSets, optimal_ball_design, optimal_masses,
                        rotatable_gap, rotatable_optimal)
from eoptd.design import information_matrix, moments_of
from eoptd.exact import fmt
from eoptd.spectrum import matrix_lambda_min, symmetric_spectrum

k = 3
sets = BallSupportSets(k)
print(len(sets.vertices), "vertices,", len(sets.face_centers), "face centers, 1 center")
print("masses", [fmt(w) for w in optimal_masses(k)])

d = optimal_ball_design(k)
mom = moments_of(k, d)
print("moments", mom)
print("spectrum", symmetric_spectrum(mom, k))
lam, mult, _ = matrix_lambda_min(information_matrix(k, d))
print("lambda_min from the full matrix", fmt(lam), "x", mult)

# The optimal ball design is not rotatable (c != 3b), and the best rotatable
# design is strictly worse.
rot = rotatable_optimal(k)
print("rotatable sphere mass", fmt(rot.alpha))
for k in range(2, 9):
    lam_rot, lam_opt, eff = rotatable_gap(k)
    print(k, fmt(lam_rot), fmt(lam_opt), f"{float(eff):.4f}")
