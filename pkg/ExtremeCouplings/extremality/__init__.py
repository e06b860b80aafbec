from .RegressionSystem import RegressionSystem, build_regression_system, support_orbits
from .ExtremalityVerdict import ExtremalityVerdict, Certificate
from .extreme_points import test_extreme, perturbation_pair, regression_residuals, verify_certificate, constraint_rank_oracle
from .decomposition import transfer_certificate, rectangle_certificate, RectangleCertificate, decompose
