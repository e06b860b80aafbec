from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
import logging
from datastructures import Coupling, InvalidInputError
from exactarith import RatMatrix
from symmetry import OrbitDecomposition
from .extreme_points import test_extreme
from .RegressionSystem import support_orbits

logger = logging.getLogger(__name__)

"""
Construções que usam os certificados de não extremalidade: transferência de zeta entre acoplamentos com o mesmo
suporte, a perturbação elementar num retângulo de células positivas e a decomposição de um acoplamento em pontos extremos
"""


def transfer_certificate(omega:Coupling, omega2:Coupling, zeta:Sequence[Fraction], orbits:OrbitDecomposition)->tuple[Fraction,...]:
   """
   Dada zeta satisfazendo as condições de regressão para omega, devolve zeta' = zeta omega / omega2, que satisfaz as
   mesmas condições para omega2. Precisa de S(omega) contido em S(omega2)

   Return:
      (tuple[Fraction,...]): zeta' indexada pelas órbitas diagonais
   """
   support = set(support_orbits(omega, orbits))
   support2 = set(support_orbits(omega2, orbits))
   if not support <= support2:
      raise InvalidInputError("transferência de certificado precisa de S(omega) contido em S(omega2)")

   transferred = [Fraction(0)] * orbits.m12
   for index in support:
      representative = orbits.orbits12[index][0]
      transferred[index] = Fraction(zeta[index]) * omega.matrix[representative] / omega2.matrix[representative]
   return tuple(transferred)


@dataclass(frozen=True)
class RectangleCertificate:
   rows:tuple[int,int]
   cols:tuple[int,int]
   step:Fraction
   omega_plus:Coupling
   omega_minus:Coupling


def rectangle_certificate(c:Coupling)->RectangleCertificate | None:
   """
   Procura linhas i != i' e colunas j != j' com as quatro células positivas. Nesse caso, com p = menor massa positiva,
   somar p em (i,j), (i',j') e subtrair em (i',j), (i,j') (e o contrário) dá dois acoplamentos com as mesmas marginais e
   ponto médio omega. Só vale para o grupo trivial, a perturbação não é invariante por ações não triviais

   Return:
      (RectangleCertificate | None): o primeiro retângulo em ordem lexicográfica, ou None se não existe
   """
   positive = c.support
   if not positive:
      return None
   step = min(c.matrix[cell] for cell in positive)

   for i in range(c.n1):
      for i2 in range(i + 1, c.n1):
         shared = [j for j in range(c.n2) if (i, j) in positive and (i2, j) in positive]
         if len(shared) < 2:
            continue
         j, j2 = shared[0], shared[1]
         rows = c.matrix.to_rows()
         plus = [r[:] for r in rows]
         minus = [r[:] for r in rows]
         for (a, b), sign in (((i, j), 1), ((i2, j2), 1), ((i2, j), -1), ((i, j2), -1)):
            plus[a][b] += sign * step
            minus[a][b] -= sign * step
         return RectangleCertificate(
            (i, i2), (j, j2), step,
            Coupling(RatMatrix.from_rows(plus), c.mu1, c.mu2),
            Coupling(RatMatrix.from_rows(minus), c.mu1, c.mu2)
         )
   return None

def _walk_to_vertex(c:Coupling, orbits:OrbitDecomposition)->Coupling:
   """
   Anda na direção omega zeta do certificado até alguma órbita do suporte zerar, repetindo até chegar num ponto
   extremo. O suporte diminui a cada passo e o resultado tem suporte contido em S(c)
   """
   current = c
   while True:
      verdict = test_extreme(current, orbits)
      if verdict.extreme:
         return current
      zeta = verdict.certificate.zeta
      negatives = [-zeta[k] for k in verdict.support_orbits if zeta[k] < 0]
      step = 1 / max(negatives) #maior t com omega (1 + t zeta) >= 0
      entries = [mass * (1 + step * zeta[orbits.orbit_of_cell(x1, x2)]) for x1, x2, mass in current.matrix.cells()]
      current = Coupling(RatMatrix(current.n1, current.n2, entries), c.mu1, c.mu2)

def decompose(c:Coupling, orbits:OrbitDecomposition)->list[tuple[Fraction,Coupling]]:
   """
   Escreve um acoplamento como combinação convexa de pontos extremos, no estilo da decomposição de Birkhoff-von Neumann:
   acha um vértice v com suporte dentro do suporte atual, subtrai o maior múltiplo lambda v possível e renormaliza.
   Cada iteração zera pelo menos uma órbita, então são no máximo N(omega) vértices, todos distintos

   Args:
      c (Coupling): acoplamento validado
      orbits (OrbitDecomposition): órbitas da ação

   Return:
      (list[tuple[Fraction,Coupling]]): pares (peso, vértice), pesos positivos somando 1 e soma ponderada igual a c
   """
   pieces:list[tuple[Fraction,Coupling]] = []
   remaining = Fraction(1)
   current = c
   while True:
      vertex = _walk_to_vertex(current, orbits)
      if vertex.matrix == current.matrix:
         pieces.append((remaining, vertex))
         break
      ratio = min(current.matrix[cell] / vertex.matrix[cell] for cell in vertex.support)
      pieces.append((remaining * ratio, vertex))
      rest = (current.matrix - vertex.matrix.scale(ratio)).scale(1 / (1 - ratio))
      current = Coupling(rest, c.mu1, c.mu2)
      remaining *= 1 - ratio

   logger.debug("decomposição com %d vértices", len(pieces))
   return pieces
