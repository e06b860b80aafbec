from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
from datastructures import Marginal, InvalidInputError
from exactarith import RatMatrix
from symmetry import ActionGenerator


@dataclass(frozen=True)
class StrippedProblem:
   """
   Problema reindexado sem os pontos de massa zero. keep1/keep2 guardam o índice original de cada ponto mantido,
   para os relatórios poderem citar os índices do arquivo de entrada
   """
   mu1:Marginal
   mu2:Marginal
   generators:tuple[ActionGenerator,...]
   omega:tuple[tuple[Fraction,...],...] | None
   keep1:tuple[int,...]
   keep2:tuple[int,...]
   original_n1:int = 0
   original_n2:int = 0

   @property
   def stripped_anything(self)->bool:
      return len(self.keep1) != self.original_n1 or len(self.keep2) != self.original_n2

   def embed_matrix(self, matrix:RatMatrix)->RatMatrix:
      """
      Leva uma matriz nos índices reduzidos de volta aos índices originais, com zeros nos pontos removidos
      """
      entries = [Fraction(0)] * (self.original_n1 * self.original_n2)
      for i, j, value in matrix.cells():
         entries[self.keep1[i] * self.original_n2 + self.keep2[j]] = value
      return RatMatrix(self.original_n1, self.original_n2, entries)


def _restrict_permutation(perm:Sequence[int], keep:Sequence[int], label:str)->tuple[int,...]:
   new_index = {old: new for new, old in enumerate(keep)}
   restricted:list[int] = []
   for old in keep:
      image = perm[old]
      if image not in new_index:
         raise InvalidInputError(f"{label} leva o ponto {old} de massa positiva no ponto {image} de massa zero, a ação não estabiliza o suporte")
      restricted.append(new_index[image])
   return tuple(restricted)

def strip_zero_mass(
      mu1:Sequence[Fraction],
      mu2:Sequence[Fraction],
      generators:Sequence[tuple[Sequence[int],Sequence[int]]],
      omega:Sequence[Sequence[Fraction]] | None = None
   )->StrippedProblem:
   """
   Remove os pontos de massa zero das marginais, reindexando os espaços e restringindo a ação do grupo.
   O teorema de extremalidade supõe marginais com suporte total, essa etapa reconcilia entradas arbitrárias com isso

   Args:
      mu1 (Sequence[Fraction]): massas em X1 (não negativas, somando 1)
      mu2 (Sequence[Fraction]): massas em X2
      generators (Sequence[tuple]): pares (perm1, perm2) já checados como permutações
      omega (Sequence[Sequence[Fraction]] | None): matriz opcional do acoplamento

   Return:
      (StrippedProblem): problema com marginais estritamente positivas
   """
   marginal1, marginal2 = Marginal(mu1), Marginal(mu2)
   keep1 = tuple(marginal1.support())
   keep2 = tuple(marginal2.support())

   restricted = tuple(
      ActionGenerator(_restrict_permutation(g1, keep1, "g1"), _restrict_permutation(g2, keep2, "g2"))
      for g1, g2 in generators
   )

   stripped_omega = None
   if omega is not None:
      dropped1 = set(range(len(mu1))) - set(keep1)
      dropped2 = set(range(len(mu2))) - set(keep2)
      for i, row in enumerate(omega):
         for j, value in enumerate(row):
            if value != 0 and (i in dropped1 or j in dropped2):
               raise InvalidInputError(f"omega tem massa {value} na célula ({i},{j}), mas esse ponto tem massa marginal zero")
      stripped_omega = tuple(tuple(Fraction(omega[i][j]) for j in keep2) for i in keep1)

   return StrippedProblem(
      mu1=Marginal([marginal1[i] for i in keep1]),
      mu2=Marginal([marginal2[j] for j in keep2]),
      generators=restricted,
      omega=stripped_omega,
      keep1=keep1,
      keep2=keep2,
      original_n1=len(mu1),
      original_n2=len(mu2)
   )
