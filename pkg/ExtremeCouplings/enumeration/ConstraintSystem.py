from dataclasses import dataclass
from fractions import Fraction
from datastructures import Marginal
from exactarith import RatMatrix
from symmetry import OrbitDecomposition


@dataclass(frozen=True)
class ConstraintSystem:
   """
   Equações marginais de K(mu1, mu2) em coordenadas de massa por órbita: linhas são os pontos de X1 seguidos dos
   pontos de X2, colunas são as órbitas diagonais, e a entrada conta quantas células da órbita estão naquela linha
   (ou coluna) do acoplamento. A região viável {c >= 0 : A c = b} é exatamente K(mu1, mu2)
   """
   matrix:RatMatrix
   rhs:tuple[Fraction,...]

   @property
   def orbit_count(self)->int:
      return self.matrix.cols

   def restricted(self, columns:tuple[int,...])->RatMatrix:
      return self.matrix.select_columns(columns)

   def row_masks(self)->tuple[int,...]:
      """
      Para cada órbita, bitmask das equações em que ela aparece (bit r ligado se a entrada na linha r é positiva)
      """
      masks = []
      for j in range(self.matrix.cols):
         mask = 0
         for r, value in enumerate(self.matrix.col(j)):
            if value:
               mask |= 1 << r
         masks.append(mask)
      return tuple(masks)


def build_constraint_system(mu1:Marginal, mu2:Marginal, orbits:OrbitDecomposition)->ConstraintSystem:
   n1, n2 = orbits.n1, orbits.n2
   if (len(mu1), len(mu2)) != (n1, n2):
      raise ValueError("marginais não combinam com os tamanhos das órbitas")

   counts = [[0] * orbits.m12 for _ in range(n1 + n2)]
   for index, orbit in enumerate(orbits.orbits12):
      for x1, x2 in orbit:
         counts[x1][index] += 1
         counts[n1 + x2][index] += 1

   return ConstraintSystem(RatMatrix.from_rows(counts), tuple(mu1) + tuple(mu2))
