"""E-optimal designs on the cube [-1, 1]^k built from barycenter classes."""

from eoptd.cube import (diophantine_pairs, enumerate_feasible_triples, expand_design,
                        minimal_support_design, support_count)
from eoptd.design import information_matrix
from eoptd.exact import fmt
from eoptd.spectrum import matrix_lambda_min

# Every E-optimal barycenter design needs moments a = 2/5, b = 1/5.
# For k = 4 there are several; list them by support size.
for sol in enumerate_feasible_triples(4):
    print(sol)

# The smallest one, expanded into explicit points.
sol = minimal_support_design(4)
d = expand_design(4, sol)
print(len(d), "points")
lam, mult, exact = matrix_lambda_min(information_matrix(4, d))
print("lambda_min", fmt(lam), "multiplicity", mult)

# Two-class designs only exist for special k.
for k in range(2, 13):
    print(k, diophantine_pairs(k))

# The minimal support grows quickly with k.
for k in (6, 10, 16, 24):
    sol = minimal_support_design(k)
    print(k, sol.support_depths, [fmt(w) for w in sol.support_masses],
          support_count(k, sol.support_depths))
