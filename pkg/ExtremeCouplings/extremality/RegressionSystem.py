from dataclasses import dataclass
from fractions import Fraction
from datastructures import Coupling, EmptySupport
from exactarith import RatMatrix
from symmetry import OrbitDecomposition


@dataclass(frozen=True)
class RegressionSystem:
   """
   Sistema linear das condições de regressão para funções zeta constantes nas órbitas do suporte.
   Uma coluna por órbita diagonal contida em S(omega), uma linha por ponto de X1 (E[zeta | xi1] = 0) seguida de uma
   linha por ponto de X2 (E[zeta | xi2] = 0). A entrada (x1, O) é a soma de omega(x1, x2) nas células de O na linha x1
   """
   variables:tuple[int,...] #índices das órbitas do suporte em orbits.orbits12, ordenadas pela menor célula
   matrix:RatMatrix

   @property
   def support_orbit_count(self)->int:
      return len(self.variables)


def support_orbits(c:Coupling, orbits:OrbitDecomposition)->tuple[int,...]:
   """
   Órbitas diagonais com massa positiva. Como o acoplamento é constante nas órbitas basta olhar o representante
   """
   return tuple(index for index, orbit in enumerate(orbits.orbits12) if c.matrix[orbit[0]] > 0)

def build_regression_system(c:Coupling, orbits:OrbitDecomposition)->RegressionSystem:
   """
   Monta a matriz das condições (ii) e (iii) sobre as órbitas do suporte

   Args:
      c (Coupling): acoplamento validado (constante nas órbitas)
      orbits (OrbitDecomposition): órbitas da ação diagonal

   Return:
      (RegressionSystem): variáveis (órbitas) e matriz (n1 + n2) x N(omega)
   """
   variables = support_orbits(c, orbits)
   if not variables:
      raise EmptySupport("acoplamento sem células de massa positiva")

   n1, n2 = c.n1, c.n2
   columns:list[list[Fraction]] = []
   for orbit_index in variables:
      column = [Fraction(0)] * (n1 + n2)
      for x1, x2 in orbits.orbits12[orbit_index]:
         mass = c.matrix[x1, x2]
         column[x1] += mass
         column[n1 + x2] += mass
      columns.append(column)

   entries = [columns[k][r] for r in range(n1 + n2) for k in range(len(variables))]
   return RegressionSystem(variables, RatMatrix(n1 + n2, len(variables), entries))
