from .ConstraintSystem import ConstraintSystem, build_constraint_system
from .VertexSet import VertexSet
from .vertex_enumeration import enumerate_extreme, support_window, required_budget
from .vertex_checks import (
   verify_birkhoff, check_support_bounds, check_support_uniqueness,
   BirkhoffReport, SupportBoundsReport, SupportUniquenessReport
)
