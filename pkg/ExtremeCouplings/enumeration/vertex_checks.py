from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
import logging
from datastructures import Marginal, InvalidInputError
from couplings import permutation_coupling
from symmetry import OrbitDecomposition, trivial_orbits
from .VertexSet import VertexSet
from .vertex_enumeration import enumerate_extreme, required_budget

logger = logging.getLogger(__name__)

"""
Checagens executáveis das consequências do teste de extremalidade sobre um conjunto de vértices enumerado: a forma
dos vértices do politopo de Birkhoff, a janela de tamanhos de suporte e a unicidade do vértice dado o suporte
"""


@dataclass(frozen=True)
class BirkhoffReport:
   m:int
   count:int
   expected_count:int
   all_permutation_type:bool
   missing:tuple[tuple[int,...],...] = () #permutações sem vértice correspondente
   unexpected:int = 0 #vértices que não são (1/m) P_sigma

   @property
   def passed(self)->bool:
      return self.all_permutation_type and self.count == self.expected_count and not self.missing

   def to_dict(self)->dict:
      return {
         "m": self.m,
         "count": self.count,
         "expected_count": self.expected_count,
         "all_permutation_type": self.all_permutation_type,
         "missing": [list(s) for s in self.missing],
         "unexpected": self.unexpected,
         "passed": self.passed
      }


@dataclass(frozen=True)
class SupportBoundsReport:
   lower:int #max(m1, m2)
   upper:int #m1 + m2
   orbit_counts:tuple[int,...]
   vertex_count:int
   count_bound:int #soma de C(m12, r) para r em [lower, upper]
   out_of_window:tuple[int,...] = () #índices dos vértices fora da janela

   @property
   def passed(self)->bool:
      return not self.out_of_window and self.vertex_count <= self.count_bound

   def to_dict(self)->dict:
      return {
         "window": [self.lower, self.upper],
         "orbit_counts": list(self.orbit_counts),
         "vertex_count": self.vertex_count,
         "count_bound": self.count_bound,
         "out_of_window": list(self.out_of_window),
         "passed": self.passed
      }


@dataclass(frozen=True)
class SupportUniquenessReport:
   vertex_count:int
   containments:tuple[tuple[int,int],...] = field(default=()) #pares (i, j) com S(v_i) contido em S(v_j)

   @property
   def passed(self)->bool:
      return not self.containments

   def to_dict(self)->dict:
      return {
         "vertex_count": self.vertex_count,
         "containments": [list(pair) for pair in self.containments],
         "passed": self.passed
      }


def verify_birkhoff(m:int, budget:int|None = None)->BirkhoffReport:
   """
   Enumera os vértices de K(uniforme, uniforme) com grupo trivial e compara com {(1/m) P_sigma : sigma em S_m}

   Args:
      m (int): tamanho dos dois espaços, m >= 1
      budget (int|None): orçamento da enumeração

   Return:
      (BirkhoffReport): contagem, esperado m! e discrepâncias
   """
   if m < 1:
      raise InvalidInputError(f"birkhoff precisa de m >= 1, recebido {m}")
   uniform = Marginal.uniform(m)
   vertices = enumerate_extreme(uniform, uniform, trivial_orbits(m, m), budget)

   expected = {permutation_coupling(sigma).matrix: sigma for sigma in permutations(range(m))}
   found = {v.matrix for v in vertices}
   missing = tuple(sorted(sigma for matrix, sigma in expected.items() if matrix not in found))
   unexpected = sum(1 for matrix in found if matrix not in expected)

   report = BirkhoffReport(m, len(vertices), factorial(m), unexpected == 0, missing, unexpected)
   logger.info("birkhoff m=%d: %d vértices, esperado %d", m, report.count, report.expected_count)
   return report

def check_support_bounds(vs:VertexSet, orbits:OrbitDecomposition)->SupportBoundsReport:
   """
   Confere max(m1, m2) <= N(omega) <= m1 + m2 para cada vértice e |vs| <= soma de C(m12, r) na mesma janela
   """
   lower = max(orbits.m1, orbits.m2)
   upper = orbits.m1 + orbits.m2
   counts = tuple(vs.stats)
   outside = tuple(k for k, n in enumerate(counts) if not (lower <= n <= upper))
   bound = required_budget(orbits.m12, (lower, upper))
   return SupportBoundsReport(lower, upper, counts, len(vs), bound, outside)

def check_support_uniqueness(vs:VertexSet)->SupportUniquenessReport:
   """
   Nenhum suporte de vértice pode estar contido no suporte de outro vértice
   """
   containments = tuple(
      (i, j)
      for i, si in enumerate(vs.supports)
      for j, sj in enumerate(vs.supports)
      if i != j and si <= sj
   )
   return SupportUniquenessReport(len(vs), containments)
