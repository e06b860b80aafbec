from .RatMatrix import RatMatrix
from .linear_algebra import rref, null_space, solve, normalize_integer_vector, RrefResult, LinearSolution
from .rationals import Rational, parse_rational, format_rational, format_vector
