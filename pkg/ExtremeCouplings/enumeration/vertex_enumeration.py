from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Sequence
import logging
from datastructures import Marginal, BudgetExceeded, InvalidInputError
from couplings import coupling_from_orbit_masses
from symmetry import OrbitDecomposition
from coupling_config import get_config_or
from .ConstraintSystem import ConstraintSystem, build_constraint_system
from .VertexSet import VertexSet

logger = logging.getLogger(__name__)

"""
Enumeração dos pontos extremos de K(mu1, mu2) por busca em subconjuntos de órbitas diagonais. Um subconjunto S é o
suporte de um vértice quando o sistema restrito A_S c = b tem solução única com todas as entradas positivas.

A busca é em profundidade, adicionando órbitas em ordem crescente de índice e mantendo uma base escalonada das
colunas escolhidas. Se uma coluna é dependente das anteriores nenhum superconjunto tem solução única, então o ramo
inteiro é cortado. A solução de cada subconjunto sai da mesma base, reduzindo b contra ela
"""


#entrada da base: (posição do pivô, vetor reduzido, combinação das colunas originais que gera o vetor)
BasisEntry = tuple[int, list[Fraction], dict[int,Fraction]]
Found = tuple[int, tuple[Fraction,...]]


def support_window(orbits:OrbitDecomposition, use_support_window:bool = True)->tuple[int,int]:
   """
   Tamanhos de suporte a testar: max(m1, m2) <= |S| <= min(m1 + m2, m12), ou 1..m12 sem a janela
   """
   if not use_support_window:
      return (1, orbits.m12)
   return (max(orbits.m1, orbits.m2), min(orbits.m1 + orbits.m2, orbits.m12))

def required_budget(m12:int, window:tuple[int,int])->int:
   """
   Soma de C(m12, r) para r na janela, o número de subconjuntos que a busca pode ter que resolver
   """
   low, high = window
   return sum(comb(m12, r) for r in range(low, high + 1))

def _reduce(vector:Sequence[Fraction], basis:list[BasisEntry])->tuple[list[Fraction], list[Fraction]]:
   #cada vetor da base é zero nos pivôs das entradas anteriores, então uma passada em ordem basta
   v = list(vector)
   factors:list[Fraction] = []
   for pivot, w, _ in basis:
      factor = v[pivot]
      factors.append(factor)
      if factor:
         for r in range(len(v)):
            v[r] -= factor * w[r]
   return v, factors

def _combine(factors:list[Fraction], basis:list[BasisEntry])->dict[int,Fraction]:
   combo:dict[int,Fraction] = {}
   for factor, (_, _, entry_combo) in zip(factors, basis):
      if not factor:
         continue
      for j, value in entry_combo.items():
         combo[j] = combo.get(j, Fraction(0)) + factor * value
   return combo

def _insert(column:int, vector:Sequence[Fraction], basis:list[BasisEntry])->BasisEntry | None:
   """
   Reduz a coluna contra a base. None se ela é combinação das colunas já escolhidas
   """
   v, factors = _reduce(vector, basis)
   pivot = next((r for r, x in enumerate(v) if x), None)
   if pivot is None:
      return None
   scale = v[pivot]
   combo = {j: -value / scale for j, value in _combine(factors, basis).items()}
   combo[column] = combo.get(column, Fraction(0)) + 1 / scale
   return (pivot, [x / scale for x in v], combo)

class _BranchSearch:
   """
   Busca em profundidade nos subconjuntos cujo menor índice é fixo. Guarda os contadores e os suportes achados
   """

   def __init__(self, system:ConstraintSystem, window:tuple[int,int]) -> None:
      self.columns = [system.matrix.col(j) for j in range(system.orbit_count)]
      self.masks = system.row_masks()
      self.full = (1 << system.matrix.rows) - 1
      self.rhs = system.rhs
      self.low, self.high = window
      self.examined = 0
      self.solved = 0
      self.found:list[Found] = []

   def run(self, first:int)->'_BranchSearch':
      entry = _insert(first, self.columns[first], [])
      if entry is not None:
         self._walk([first], [entry], self.masks[first])
      return self

   def _accept(self, subset:list[int], basis:list[BasisEntry]) -> None:
      self.solved += 1
      residual, factors = _reduce(self.rhs, basis)
      if any(residual): #b fora do espaço gerado, sistema sem solução
         return
      solution = _combine(factors, basis)
      masses = tuple(solution.get(j, Fraction(0)) for j in subset)
      if all(x > 0 for x in masses):
         self.found.append((sum(1 << j for j in subset), masses))

   def _walk(self, subset:list[int], basis:list[BasisEntry], covered:int) -> None:
      if len(subset) >= self.low:
         self.examined += 1
         if covered == self.full: #uma equação sem variável não fecha com b > 0
            self._accept(subset, basis)
      if len(subset) == self.high:
         return
      for j in range(subset[-1] + 1, len(self.columns)):
         entry = _insert(j, self.columns[j], basis)
         if entry is None: #colunas dependentes, nenhum superconjunto tem solução única
            continue
         subset.append(j)
         basis.append(entry)
         self._walk(subset, basis, covered | self.masks[j])
         basis.pop()
         subset.pop()

def _search_branch(system:ConstraintSystem, window:tuple[int,int], first:int)->tuple[int,int,list[Found]]:
   branch = _BranchSearch(system, window).run(first)
   return branch.examined, branch.solved, branch.found

def enumerate_extreme(
   mu1:Marginal,
   mu2:Marginal,
   orbits:OrbitDecomposition,
   budget:int|None = None,
   use_support_window:bool = True,
   workers:int = 1
)->VertexSet:
   """
   Enumera todos os pontos extremos de K(mu1, mu2) em escala de mesa

   Args:
      mu1 (Marginal): marginal em X1, estritamente positiva e invariante
      mu2 (Marginal): marginal em X2, estritamente positiva e invariante
      orbits (OrbitDecomposition): órbitas da ação
      budget (int|None): máximo de subconjuntos na janela, padrão ENUMERATION_BUDGET da config
      use_support_window (bool): restringe |S| à janela max(m1,m2)..m1+m2, False testa todos os tamanhos
      workers (int): processos para avaliar os ramos da busca em paralelo

   Return:
      (VertexSet): vértices ordenados pelo bitmask do suporte
   """
   budget = get_config_or("ENUMERATION_BUDGET", budget)
   if not (mu1.is_strictly_positive() and mu2.is_strictly_positive()):
      raise InvalidInputError("enumeração precisa de marginais estritamente positivas (use strip_zero_mass antes)")
   for label, mu, point_orbits in (("mu1", mu1, orbits.orbits1), ("mu2", mu2, orbits.orbits2)):
      if not all(mu.is_constant_on(orbit) for orbit in point_orbits):
         raise InvalidInputError(f"{label} não é invariante pela ação do grupo")

   window = support_window(orbits, use_support_window)
   required = required_budget(orbits.m12, window)
   if required > budget:
      raise BudgetExceeded(required, budget)

   system = build_constraint_system(mu1, mu2, orbits)
   branches = range(orbits.m12)
   logger.info("enumerando até %d subconjuntos de %d órbitas, tamanhos %s", required, orbits.m12, window)

   if workers > 1 and orbits.m12 > 1:
      with ProcessPoolExecutor(max_workers=workers) as executor:
         futures = [executor.submit(_search_branch, system, window, first) for first in branches]
         results = [future.result() for future in futures]
   else:
      results = [_search_branch(system, window, first) for first in branches]

   examined = sum(r[0] for r in results)
   solved = sum(r[1] for r in results)
   found = sorted((item for r in results for item in r[2]), key=lambda item: item[0])

   vertices = []
   supports = []
   seen = set()
   for bitmask, masses in found:
      support = [j for j in range(orbits.m12) if bitmask >> j & 1]
      full_masses = [Fraction(0)] * orbits.m12
      for j, mass in zip(support, masses):
         full_masses[j] = mass
      vertex = coupling_from_orbit_masses(full_masses, orbits, mu1, mu2)
      if vertex.matrix in seen: #soluções únicas com suportes diferentes não deveriam repetir
         logger.warning("vértice repetido para o suporte %s, ignorado", support)
         continue
      seen.add(vertex.matrix)
      vertices.append(vertex)
      supports.append(frozenset(support))

   logger.info("%d vértices, %d sistemas resolvidos de %d subconjuntos examinados", len(vertices), solved, examined)
   return VertexSet(tuple(vertices), tuple(supports), examined, solved, window)
