from dataclasses import dataclass
from fractions import Fraction
from datastructures import InvalidP, InvalidInputError


@dataclass(frozen=True)
class DyadicSpec:
   """
   Parâmetros da construção de dois pontos: P(0) = p, P(1) = q = 1 - p com 0 < p < q < 1, e a profundidade da
   truncagem (espaço de tamanho 2^depth)
   """
   p:Fraction
   depth:int = 1

   def __post_init__(self) -> None:
      p = Fraction(self.p)
      object.__setattr__(self, "p", p)
      if not (0 < p < Fraction(1, 2)):
         raise InvalidP(f"p deve estar em (0, 1/2), recebido {p}")
      if self.depth < 1:
         raise InvalidInputError(f"profundidade deve ser >= 1, recebida {self.depth}")

   @property
   def q(self)->Fraction:
      return 1 - self.p

   @property
   def size(self)->int:
      return 2 ** self.depth


@dataclass(frozen=True)
class SamplePair:
   """
   Um par (xi', eta') = (F_p(xi~), F_p(eta~)) em [0,1]^2
   """
   xi_prime:float
   eta_prime:float
