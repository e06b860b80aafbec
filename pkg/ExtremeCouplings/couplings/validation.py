from fractions import Fraction
from typing import Sequence
from datastructures import Coupling, Marginal, Violation, GraphicVerdict, GraphicKind, ViolationKind, CouplingValidationError
from exactarith import RatMatrix, format_rational
from symmetry import OrbitDecomposition

"""
Validação de elementos de K(mu1, mu2): massas não negativas, marginais corretas e invariância pela ação diagonal.
Também as operações de leitura de um acoplamento já validado (marginais e formato do suporte)
"""


def _as_matrix(matrix:RatMatrix|Sequence[Sequence])->RatMatrix:
   if isinstance(matrix, RatMatrix):
      return matrix
   return RatMatrix.from_rows(matrix)

def collect_violations(matrix:RatMatrix|Sequence[Sequence], mu1:Marginal, mu2:Marginal, orbits:OrbitDecomposition)->list[Violation]:
   """
   Lista todas as violações das invariantes de K(mu1, mu2) para a matriz dada, sem lançar exceção.
   Lista vazia significa que a matriz é um acoplamento válido
   """
   matrix = _as_matrix(matrix)
   violations:list[Violation] = []

   n1, n2 = matrix.shape
   if (n1, n2) != (len(mu1), len(mu2)) or (n1, n2) != (orbits.n1, orbits.n2):
      violations.append(Violation(
         ViolationKind.DIMENSION_MISMATCH,
         f"matrix is {n1}x{n2}, marginals have sizes {len(mu1)} and {len(mu2)}, orbits are for {orbits.n1}x{orbits.n2}",
         (n1, n2)
      ))
      return violations #sem dimensões certas as outras checagens não fazem sentido

   #invariância das marginais, cada mu_i deve ser constante nas órbitas de X_i
   for index, orbit in enumerate(orbits.orbits1):
      if not mu1.is_constant_on(orbit):
         violations.append(Violation(ViolationKind.MARGINAL_NOT_INVARIANT, f"mu1 not constant on orbit {list(orbit)} of X1", (1, index)))
   for index, orbit in enumerate(orbits.orbits2):
      if not mu2.is_constant_on(orbit):
         violations.append(Violation(ViolationKind.MARGINAL_NOT_INVARIANT, f"mu2 not constant on orbit {list(orbit)} of X2", (2, index)))

   for i, j, value in matrix.cells():
      if value < 0:
         violations.append(Violation(ViolationKind.NEGATIVE_ENTRY, f"negative entry {format_rational(value)} at ({i},{j})", (i, j)))

   for i in range(n1):
      row_sum = sum(matrix.row(i), Fraction(0))
      if row_sum != mu1[i]:
         violations.append(Violation(
            ViolationKind.ROW_SUM_MISMATCH,
            f"row {i} sum mismatch: {format_rational(row_sum)} vs mu1 {format_rational(mu1[i])}",
            (i,)
         ))
   for j in range(n2):
      col_sum = sum(matrix.col(j), Fraction(0))
      if col_sum != mu2[j]:
         violations.append(Violation(
            ViolationKind.COLUMN_SUM_MISMATCH,
            f"column {j} sum mismatch: {format_rational(col_sum)} vs mu2 {format_rational(mu2[j])}",
            (j,)
         ))

   for index, orbit in enumerate(orbits.orbits12):
      values = {matrix[cell] for cell in orbit}
      if len(values) > 1:
         violations.append(Violation(
            ViolationKind.ORBIT_NOT_CONSTANT,
            f"omega not constant on diagonal orbit {[list(c) for c in orbit]}",
            (index,)
         ))

   return violations

def validate(matrix:RatMatrix|Sequence[Sequence], mu1:Marginal, mu2:Marginal, orbits:OrbitDecomposition)->Coupling:
   """
   Valida uma matriz de massas contra as marginais e a ação do grupo

   Args:
      matrix (RatMatrix|Sequence[Sequence]): massas omega(x1, x2)
      mu1 (Marginal): marginal em X1
      mu2 (Marginal): marginal em X2
      orbits (OrbitDecomposition): órbitas da ação

   Return:
      (Coupling): acoplamento validado

   Raises:
      CouplingValidationError: com a lista de violações, caso exista alguma
   """
   matrix = _as_matrix(matrix)
   violations = collect_violations(matrix, mu1, mu2, orbits)
   if violations:
      raise CouplingValidationError(violations)
   return Coupling(matrix, mu1, mu2)

def marginals(c:Coupling)->tuple[Marginal,Marginal]:
   """
   Somas exatas das linhas e colunas do acoplamento
   """
   rows = [sum(c.matrix.row(i), Fraction(0)) for i in range(c.n1)]
   cols = [sum(c.matrix.col(j), Fraction(0)) for j in range(c.n2)]
   return Marginal(rows), Marginal(cols)

def is_graphic(c:Coupling)->GraphicVerdict:
   """
   Testa se o suporte é o gráfico de uma função X1 -> X2 (forward), X2 -> X1 (backward), das duas (bijeção) ou de nenhuma
   """
   row_cells:list[list[int]] = [[] for _ in range(c.n1)]
   col_cells:list[list[int]] = [[] for _ in range(c.n2)]
   for x1, x2 in c.sorted_support():
      row_cells[x1].append(x2)
      col_cells[x2].append(x1)

   forward = tuple(cells[0] for cells in row_cells) if all(len(cells) == 1 for cells in row_cells) else None
   backward = tuple(cells[0] for cells in col_cells) if all(len(cells) == 1 for cells in col_cells) else None

   if forward is not None and backward is not None:
      kind = GraphicKind.BOTH
   elif forward is not None:
      kind = GraphicKind.FORWARD
   elif backward is not None:
      kind = GraphicKind.BACKWARD
   else:
      kind = GraphicKind.NEITHER
   return GraphicVerdict(kind, forward, backward)
