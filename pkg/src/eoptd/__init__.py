"""Exact E-optimal designs for second-order response surfaces on the cube and the ball."""

from .ball import (BallSupportSets, DispersionCoefficients, RotatableDesign, ball_moments,
                   dispersion, dispersion_coefficients, is_rotatable, lambda1_ball,
                   optimal_ball_design, optimal_masses, optimal_moments, random_orthogonal,
                   rotatable_alpha, rotatable_gap, rotatable_optimal, sphere_moments)
from .certify import (DualGap, ExtremalCertificate, VerificationReport, ball_certificate,
                      certificate_for, cube_certificate, dual_gap, evaluate_extremal,
                      polynomial_identity, verify_design, verify_optimal)
from .cube import (BarycenterClass, TripleSolution, barycenter_points, class_coefficients,
                   closed_form_mass, conjecture_design, diophantine_pairs,
                   enumerate_feasible_triples, expand_design, minimal_support_design,
                   solve_pair, solve_triple, support_count)
from .design import (Design, InfoMatrix, SymmetricMoments, design_from_dict, design_to_dict,
                     information_matrix, is_symmetric, load_design, dump_design, moments_of,
                     symmetric_info_matrix)
from .errors import ConvergenceError, InvalidArgument, SingularityError, SymmetryViolation
from .model import ModelSpec, regression_vector
from .optimizer import numeric_E_optimizer, project_simplex
from .spectrum import (Spectrum, eigen_sym, lambda_min_symmetric, matrix_lambda_min, phi_p,
                       symmetric_spectrum)

__version__ = "0.1.0"
