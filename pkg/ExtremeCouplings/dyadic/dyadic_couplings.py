from fractions import Fraction
from datastructures import Coupling, Marginal, InvalidP, SizeCapExceeded
from exactarith import RatMatrix
from coupling_config import get_config_or
from .DyadicSpec import DyadicSpec


def base_coupling(p:Fraction)->Coupling:
   """
   Acoplamento 2x2 [[0, p], [p, q - p]] com as duas marginais (p, q). É extremo e não é gráfico em nenhuma direção

   Args:
      p (Fraction): 0 < p < 1/2. Em p = 1/2 o suporte vira a troca (0,1), (1,0), que é gráfica

   Return:
      (Coupling): o acoplamento base
   """
   p = Fraction(p)
   if not (0 < p < Fraction(1, 2)):
      raise InvalidP(f"p deve estar em (0, 1/2), recebido {p}")
   q = 1 - p
   nu = Marginal([p, q])
   return Coupling(RatMatrix.from_rows([[0, p], [p, q - p]]), nu, nu)

def truncated_coupling(spec:DyadicSpec, size_cap:int|None = None)->Coupling:
   """
   Distribuição de ((xi, zeta_1..zeta_{d-1}), (eta, zeta_1..zeta_{d-1})) com os zeta_j iid (p, q) independentes
   do par base. Os pontos são cadeias de bits (b, z_1, ..., z_{d-1}) em ordem lexicográfica, índice
   b * 2^(d-1) + z_1 * 2^(d-2) + ... + z_{d-1}, a mesma ordem de aplicar extend_with_independent d-1 vezes

   Args:
      spec (DyadicSpec): p e profundidade d
      size_cap (int|None): maior 2^d aceito, padrão DYADIC_SIZE_CAP da config

   Return:
      (Coupling): acoplamento 2^d x 2^d
   """
   size_cap = get_config_or("DYADIC_SIZE_CAP", size_cap)
   if spec.size > size_cap:
      raise SizeCapExceeded(spec.size, size_cap)

   base = base_coupling(spec.p)
   tail = 2 ** (spec.depth - 1) #quantidade de cadeias z
   digit_mass = (spec.p, spec.q)

   tail_mass = []
   for z in range(tail):
      mass = Fraction(1)
      for j in range(spec.depth - 1):
         mass *= digit_mass[(z >> j) & 1]
      tail_mass.append(mass)

   n = spec.size
   entries = [Fraction(0)] * (n * n)
   for b, b2, base_mass in base.matrix.cells():
      if base_mass == 0:
         continue
      for z in range(tail):
         entries[(b * tail + z) * n + (b2 * tail + z)] = base_mass * tail_mass[z] #só z = z' tem massa

   marginal = Marginal([digit_mass[b] * tail_mass[z] for b in (0, 1) for z in range(tail)])
   return Coupling(RatMatrix(n, n, entries), marginal, marginal)
