from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable
from .errors import InvalidInputError


@dataclass(frozen=True)
class Marginal:
   """
   Distribuição de probabilidade num espaço finito {0, ..., n-1}, uma massa racional por ponto.
   As massas são não negativas e somam exatamente 1
   """

   masses:tuple[Fraction,...]

   def __init__(self, masses:Iterable) -> None:
      masses = tuple(Fraction(x) for x in masses)
      if not masses:
         raise InvalidInputError("marginal precisa de pelo menos um ponto")
      negatives = [i for i, x in enumerate(masses) if x < 0]
      if negatives:
         raise InvalidInputError(f"marginal com massa negativa nos pontos {negatives}")
      total = sum(masses, Fraction(0))
      if total != 1:
         raise InvalidInputError(f"massas da marginal somam {total}, deveriam somar 1")
      object.__setattr__(self, "masses", masses)

   @classmethod
   def uniform(cls, n:int) -> 'Marginal':
      if n < 1:
         raise InvalidInputError("marginal uniforme precisa de n >= 1")
      return cls([Fraction(1, n)] * n)

   @classmethod
   def point_mass(cls, n:int, point:int) -> 'Marginal':
      return cls([1 if i == point else 0 for i in range(n)])

   def __len__(self) -> int:
      return len(self.masses)

   def __getitem__(self, i:int) -> Fraction:
      return self.masses[i]

   def __iter__(self):
      return iter(self.masses)

   @property
   def size(self) -> int:
      return len(self.masses)

   def support(self) -> list[int]:
      return [i for i, x in enumerate(self.masses) if x > 0]

   def is_strictly_positive(self) -> bool:
      return all(x > 0 for x in self.masses)

   def product(self, other:'Marginal') -> 'Marginal':
      """
      Marginal produto self ⊗ other no espaço produto, indexado em ordem lexicográfica (self é a coordenada principal)
      """
      return Marginal([a * b for a in self.masses for b in other.masses])

   def is_constant_on(self, orbit:Iterable[int]) -> bool:
      values = {self.masses[i] for i in orbit}
      return len(values) <= 1
