from fractions import Fraction
from typing import Sequence
from datastructures import Coupling, Marginal, InvalidInputError
from exactarith import RatMatrix
from symmetry import OrbitDecomposition

"""
Construções de acoplamentos que são válidos por construção: acoplamento gráfico de uma função, extensão por uma
variável independente, acoplamento produto, misturas convexas e o acoplamento de uma permutação
"""


def graphic_coupling(mapping:Sequence[int], mu1:Marginal, n2:int|None = None)->Coupling:
   """
   Distribuição conjunta do par (xi, T(xi)) com xi ~ mu1. A segunda marginal é o pushforward mu1 T^-1

   Args:
      mapping (Sequence[int]): função total T: X1 -> X2, mapping[x1] = T(x1)
      mu1 (Marginal): distribuição de xi
      n2 (int|None): tamanho de X2, padrão max(T) + 1

   Return:
      (Coupling): acoplamento suportado no gráfico de T
   """
   if len(mapping) != len(mu1):
      raise InvalidInputError(f"função definida em {len(mapping)} pontos, X1 tem {len(mu1)}")
   if n2 is None:
      n2 = max(mapping) + 1
   if any(not (0 <= y < n2) for y in mapping):
      raise InvalidInputError(f"imagem da função fora de X2 = 0..{n2-1}")

   n1 = len(mu1)
   entries = [Fraction(0)] * (n1 * n2)
   pushforward = [Fraction(0)] * n2
   for x1, x2 in enumerate(mapping):
      entries[x1 * n2 + x2] = mu1[x1]
      pushforward[x2] += mu1[x1]
   return Coupling(RatMatrix(n1, n2, entries), mu1, Marginal(pushforward))

def extend_with_independent(c:Coupling, nu:Marginal)->Coupling:
   """
   Distribuição de ((xi, zeta), (eta, zeta)) com zeta ~ nu independente de (xi, eta) ~ c.
   Os espaços produto X x Z e Y x Z são indexados em ordem lexicográfica, (x, z) -> x * |Z| + z

   Args:
      c (Coupling): acoplamento em X x Y
      nu (Marginal): distribuição da variável independente em Z

   Return:
      (Coupling): acoplamento em (X x Z) x (Y x Z) com marginais mu1 ⊗ nu e mu2 ⊗ nu
   """
   k = len(nu)
   n1, n2 = c.n1 * k, c.n2 * k
   entries = [Fraction(0)] * (n1 * n2)
   for x, y, value in c.matrix.cells():
      if value == 0:
         continue
      for z in range(k):
         if nu[z] == 0:
            continue
         entries[(x * k + z) * n2 + (y * k + z)] = value * nu[z] #só células com z = z' recebem massa
   return Coupling(RatMatrix(n1, n2, entries), c.mu1.product(nu), c.mu2.product(nu))

def product_coupling(mu1:Marginal, mu2:Marginal)->Coupling:
   """
   Acoplamento independente mu1 ⊗ mu2
   """
   return Coupling(
      RatMatrix(len(mu1), len(mu2), [a * b for a in mu1 for b in mu2]),
      mu1,
      mu2
   )

def permutation_coupling(sigma:Sequence[int])->Coupling:
   """
   omega(x, y) = (1/m) delta_{sigma(x) y}, a forma dos pontos extremos com marginais uniformes (Birkhoff-von Neumann)
   """
   m = len(sigma)
   if sorted(sigma) != list(range(m)):
      raise InvalidInputError(f"{list(sigma)} não é uma permutação de 0..{m-1}")
   return graphic_coupling(sigma, Marginal.uniform(m), m)

def mix(c1:Coupling, c2:Coupling, weight:Fraction|int = Fraction(1, 2))->Coupling:
   """
   Combinação convexa weight * c1 + (1 - weight) * c2. As marginais dos dois acoplamentos precisam ser iguais
   """
   weight = Fraction(weight)
   if not (0 < weight < 1):
      raise InvalidInputError(f"peso da mistura deve estar em (0,1), recebido {weight}")
   if c1.mu1 != c2.mu1 or c1.mu2 != c2.mu2:
      raise InvalidInputError("misturas só são definidas para acoplamentos com as mesmas marginais")
   matrix = c1.matrix.scale(weight) + c2.matrix.scale(1 - weight)
   return Coupling(matrix, c1.mu1, c1.mu2)

def coupling_from_orbit_masses(orbit_masses:Sequence[Fraction], orbits:OrbitDecomposition, mu1:Marginal, mu2:Marginal)->Coupling:
   """
   Expande coordenadas por órbita (massa de cada célula da órbita) numa matriz n1 x n2
   """
   if len(orbit_masses) != orbits.m12:
      raise ValueError(f"{len(orbit_masses)} massas para {orbits.m12} órbitas")
   entries = [Fraction(0)] * (orbits.n1 * orbits.n2)
   for mass, orbit in zip(orbit_masses, orbits.orbits12):
      for x1, x2 in orbit:
         entries[x1 * orbits.n2 + x2] = Fraction(mass)
   return Coupling(RatMatrix(orbits.n1, orbits.n2, entries), mu1, mu2)
