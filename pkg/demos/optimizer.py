"""A plain projected-subgradient run lands on the analytic support sets."""

import numpy as np

from eoptd.certify import random_points
from eoptd.cube import barycenter_points
from eoptd.optimizer import numeric_E_optimizer

# 9 barycenters of the square plus 16 interior candidates
grid = np.array([p for r in range(3) for p in barycenter_points(2, r)], dtype=float)
X = np.vstack([grid, random_points("cube", 2, 16, seed=0) * 0.95])
res = numeric_E_optimizer(2, X, iterations=5000)

print("lambda_min", res.lambda_min, "(optimum 0.2)")
print("mass off the barycenters", res.weights[len(grid):].sum())
for p, w in zip(X[:len(grid)], res.weights[:len(grid)]):
    print(p, round(w, 4))

# the best value so far after every 1000 steps
print(res.best_trace[999::1000])
