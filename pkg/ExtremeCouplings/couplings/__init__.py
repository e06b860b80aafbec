from .validation import validate, collect_violations, marginals, is_graphic
from .constructions import (
   graphic_coupling, extend_with_independent, product_coupling, permutation_coupling, mix, coupling_from_orbit_masses
)
from .preprocessing import strip_zero_mass, StrippedProblem
