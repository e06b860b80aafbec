from dataclasses import dataclass
from fractions import Fraction
from datastructures import Coupling


@dataclass(frozen=True)
class Certificate:
   """
   Prova de não extremalidade: zeta (indexada por todas as órbitas diagonais, zero fora do suporte), o passo epsilon
   e o par omega± = omega (1 ± epsilon zeta), com (omega+ + omega-)/2 = omega
   """
   zeta:tuple[Fraction,...]
   epsilon:Fraction
   omega_plus:Coupling
   omega_minus:Coupling


@dataclass(frozen=True)
class ExtremalityVerdict:
   extreme:bool
   null_dim:int
   support_orbits:tuple[int,...]
   certificate:Certificate | None = None

   @property
   def support_orbit_count(self)->int:
      """
      N(omega), número de órbitas diagonais no suporte
      """
      return len(self.support_orbits)
