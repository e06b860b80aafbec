import os
import sys
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Sequence
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "ExtremeCouplings"))

from datastructures import Marginal
from symmetry import ActionGenerator, OrbitDecomposition, close_group, decompose_orbits
from enumeration import enumerate_extreme, VertexSet


@dataclass(frozen=True)
class Instance:
   """
   Instância da bateria de testes: marginais, geradores (perm1, perm2) e as órbitas já calculadas
   """
   name:str
   mu1:Marginal
   mu2:Marginal
   generators:tuple[tuple[tuple[int,...],tuple[int,...]],...]
   orbits:OrbitDecomposition

   @property
   def trivial(self)->bool:
      return self.orbits.is_trivial


def make_orbits(n1:int, n2:int, generators:Sequence[tuple[Sequence[int],Sequence[int]]] = ())->OrbitDecomposition:
   closure = close_group([ActionGenerator.create(g1, g2, n1, n2) for g1, g2 in generators], n1, n2)
   return decompose_orbits(n1, n2, closure)

def make_instance(name:str, mu1:Sequence, mu2:Sequence, generators:Sequence = ())->Instance:
   gens = tuple((tuple(g1), tuple(g2)) for g1, g2 in generators)
   return Instance(name, Marginal(mu1), Marginal(mu2), gens, make_orbits(len(mu1), len(mu2), gens))

def extended_generators(generators:Sequence, n1:int, n2:int, k:int)->list[tuple[list[int],list[int]]]:
   """
   Ação em X x Z que age só na primeira coordenada, com (x, z) indexado por x * k + z
   """
   extended = []
   for g1, g2 in generators:
      extended.append((
         [g1[x] * k + z for x in range(n1) for z in range(k)],
         [g2[y] * k + z for y in range(n2) for z in range(k)]
      ))
   return extended


SWAP2 = ((1, 0), (1, 0))
CYCLE3 = ((1, 2, 0), (1, 2, 0))

BATTERY = [
   make_instance("uniform2_trivial", [F(1, 2)] * 2, [F(1, 2)] * 2),
   make_instance("uniform3_trivial", [F(1, 3)] * 3, [F(1, 3)] * 3),
   make_instance("uniform4_trivial", [F(1, 4)] * 4, [F(1, 4)] * 4),
   make_instance("third_twothirds_trivial", [F(1, 3), F(2, 3)], [F(1, 3), F(2, 3)]),
   make_instance("rect_2x3_trivial", [F(1, 2)] * 2, [F(1, 3)] * 3),
   make_instance("rect_3x2_trivial", [F(1, 6), F(1, 3), F(1, 2)], [F(1, 4), F(3, 4)]),
   make_instance("rect_3x4_trivial", [F(1, 6), F(1, 3), F(1, 2)], [F(1, 4)] * 4),
   make_instance("uniform2_swap", [F(1, 2)] * 2, [F(1, 2)] * 2, [SWAP2]),
   make_instance("uniform4_double_swap", [F(1, 4)] * 4, [F(1, 4)] * 4, [((1, 0, 3, 2), (1, 0, 3, 2))]),
   make_instance("weighted4_double_swap", [F(1, 6), F(1, 6), F(1, 3), F(1, 3)], [F(1, 4)] * 4, [((1, 0, 3, 2), (1, 0, 3, 2))]),
   make_instance("uniform3_cycle", [F(1, 3)] * 3, [F(1, 3)] * 3, [CYCLE3]),
   make_instance("cycle_on_x1_only", [F(1, 3)] * 3, [F(1, 5), F(1, 5), F(3, 5)], [((1, 2, 0), (0, 1, 2))]),
   make_instance("rect_2x4_swap", [F(1, 2)] * 2, [F(1, 8), F(1, 8), F(3, 8), F(3, 8)], [((1, 0), (1, 0, 3, 2))]),
]


@pytest.fixture(scope="session")
def battery()->list[Instance]:
   return BATTERY

@pytest.fixture(scope="session")
def battery_vertices()->dict[str,VertexSet]:
   """
   Vértices de cada instância da bateria, enumerados uma vez por sessão
   """
   return {inst.name: enumerate_extreme(inst.mu1, inst.mu2, inst.orbits) for inst in BATTERY}

@pytest.fixture
def trivial2():
   return make_orbits(2, 2)

@pytest.fixture
def swap2():
   return make_orbits(2, 2, [SWAP2])

@pytest.fixture
def cycle3():
   return make_orbits(3, 3, [CYCLE3])
