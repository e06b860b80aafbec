from fractions import Fraction
from typing import Sequence
import logging
from datastructures import Coupling, ZeroCertificate, InvalidInputError
from exactarith import RatMatrix, null_space
from couplings import collect_violations
from symmetry import OrbitDecomposition
from .RegressionSystem import build_regression_system, support_orbits
from .ExtremalityVerdict import ExtremalityVerdict, Certificate

logger = logging.getLogger(__name__)


def _expand_to_orbits(values:Sequence[Fraction], variables:Sequence[int], m12:int)->tuple[Fraction,...]:
   full = [Fraction(0)] * m12
   for value, orbit_index in zip(values, variables):
      full[orbit_index] = Fraction(value)
   return tuple(full)

def regression_residuals(c:Coupling, zeta:Sequence[Fraction], orbits:OrbitDecomposition)->tuple[list[Fraction],list[Fraction]]:
   """
   Somas sum_x2 zeta(x1,x2) omega(x1,x2) por linha e sum_x1 zeta(x1,x2) omega(x1,x2) por coluna.
   As duas listas são zero exatamente quando zeta satisfaz as condições de regressão
   """
   rows = [Fraction(0)] * c.n1
   cols = [Fraction(0)] * c.n2
   for x1, x2, mass in c.matrix.cells():
      if mass == 0:
         continue
      weighted = zeta[orbits.orbit_of_cell(x1, x2)] * mass
      rows[x1] += weighted
      cols[x2] += weighted
   return rows, cols

def perturbation_pair(c:Coupling, zeta:Sequence[Fraction], orbits:OrbitDecomposition)->tuple[Coupling,Coupling]:
   """
   Par omega± = omega (1 ± epsilon zeta) com epsilon = 1/(2 max|zeta|) sobre as órbitas do suporte.
   As marginais são preservadas porque as somas de regressão são zero, a invariância porque zeta é constante nas
   órbitas, e a positividade porque |epsilon zeta| <= 1/2

   Args:
      c (Coupling): acoplamento validado
      zeta (Sequence[Fraction]): valor de zeta em cada órbita diagonal (tamanho m12)
      orbits (OrbitDecomposition): órbitas da ação

   Return:
      (tuple[Coupling,Coupling]): (omega+, omega-)
   """
   if len(zeta) != orbits.m12:
      raise InvalidInputError(f"zeta tem {len(zeta)} valores, existem {orbits.m12} órbitas")
   zeta = [Fraction(x) for x in zeta]
   on_support = [zeta[k] for k in support_orbits(c, orbits)]
   largest = max((abs(x) for x in on_support), default=Fraction(0))
   if largest == 0:
      raise ZeroCertificate("zeta é zero em todo o suporte")

   rows, cols = regression_residuals(c, zeta, orbits)
   if any(rows) or any(cols):
      raise InvalidInputError("zeta não satisfaz as condições de regressão")

   epsilon = 1 / (2 * largest)
   plus, minus = [], []
   for x1, x2, mass in c.matrix.cells():
      step = epsilon * zeta[orbits.orbit_of_cell(x1, x2)]
      plus.append(mass * (1 + step))
      minus.append(mass * (1 - step))
   shape = (c.n1, c.n2)
   return (
      Coupling(RatMatrix(*shape, plus), c.mu1, c.mu2),
      Coupling(RatMatrix(*shape, minus), c.mu1, c.mu2)
   )

def test_extreme(c:Coupling, orbits:OrbitDecomposition)->ExtremalityVerdict:
   """
   Decide se omega é ponto extremo de K(mu1, mu2): é extremo sse não existe zeta não nula, constante nas órbitas do
   suporte, com E[zeta | xi1] = 0 e E[zeta | xi2] = 0. Quando não é extremo, o certificado vem do primeiro vetor da
   base do núcleo

   Args:
      c (Coupling): acoplamento validado
      orbits (OrbitDecomposition): órbitas da ação diagonal

   Return:
      (ExtremalityVerdict): veredito, dimensão do núcleo e certificado (se não extremo)
   """
   system = build_regression_system(c, orbits)
   basis = null_space(system.matrix)
   null_dim = len(basis)

   if null_dim == 0:
      logger.debug("acoplamento extremo, N(omega) = %d", len(system.variables))
      return ExtremalityVerdict(True, 0, system.variables)

   zeta = _expand_to_orbits(basis[0], system.variables, orbits.m12)
   epsilon = 1 / (2 * max(abs(x) for x in zeta))
   omega_plus, omega_minus = perturbation_pair(c, zeta, orbits)
   logger.debug("acoplamento não extremo, dimensão do núcleo %d", null_dim)
   return ExtremalityVerdict(
      False,
      null_dim,
      system.variables,
      Certificate(zeta, epsilon, omega_plus, omega_minus)
   )

test_extreme.__test__ = False #não é um teste do pytest

def verify_certificate(c:Coupling, verdict:ExtremalityVerdict, orbits:OrbitDecomposition)->list[str]:
   """
   Confere um certificado sem confiar no solver: zeta não nula no suporte, somas de regressão zero, omega± válidos,
   diferentes e com ponto médio omega. Retorna a lista de problemas encontrados (vazia se o certificado é válido)
   """
   problems:list[str] = []
   certificate = verdict.certificate
   if certificate is None:
      if not verdict.extreme:
         problems.append("veredito não extremo sem certificado")
      return problems

   zeta = certificate.zeta
   if all(zeta[k] == 0 for k in support_orbits(c, orbits)):
      problems.append("zeta é zero no suporte")
   rows, cols = regression_residuals(c, zeta, orbits)
   if any(rows):
      problems.append("condição de regressão nas linhas falhou")
   if any(cols):
      problems.append("condição de regressão nas colunas falhou")

   for label, candidate in (("omega_plus", certificate.omega_plus), ("omega_minus", certificate.omega_minus)):
      violations = collect_violations(candidate.matrix, c.mu1, c.mu2, orbits)
      problems.extend(f"{label}: {v}" for v in violations)

   if certificate.omega_plus.matrix == certificate.omega_minus.matrix:
      problems.append("omega_plus igual a omega_minus")
   midpoint = (certificate.omega_plus.matrix + certificate.omega_minus.matrix).scale(Fraction(1, 2))
   if midpoint != c.matrix:
      problems.append("ponto médio de omega± diferente de omega")
   return problems

def constraint_rank_oracle(c:Coupling, orbits:OrbitDecomposition)->bool:
   """
   Caminho independente para a extremalidade: as colunas das órbitas do suporte na matriz de incidência das equações
   marginais (sem os pesos de omega) são linearmente independentes
   """
   variables = support_orbits(c, orbits)
   n1, n2 = c.n1, c.n2
   entries:list[int] = []
   for row in range(n1 + n2):
      for orbit_index in variables:
         orbit = orbits.orbits12[orbit_index]
         if row < n1:
            entries.append(sum(1 for x1, _ in orbit if x1 == row))
         else:
            entries.append(sum(1 for _, x2 in orbit if x2 == row - n1))
   incidence = RatMatrix(n1 + n2, len(variables), entries)
   return incidence.rank() == len(variables)
