from .GroupClosure import ActionGenerator, GroupClosure, close_group
from .OrbitDecomposition import OrbitDecomposition, decompose_orbits, trivial_orbits
