from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence
from datastructures.DataEnums import SolveStatus
from .RatMatrix import RatMatrix

"""
Núcleo de álgebra linear exata: forma escalonada reduzida, núcleo e classificação de sistemas lineares.
Toda decisão de extremalidade passa por aqui, então não existe tolerância numérica: tudo é Fraction
"""


@dataclass(frozen=True)
class RrefResult:
   rank:int
   pivots:tuple[int,...] #colunas pivô, em ordem crescente
   reduced:RatMatrix


@dataclass(frozen=True)
class LinearSolution:
   """
   Resultado de solve(A, b). Em UNIQUE, particular é a solução. Em UNDERDETERMINED, particular é a solução com as
   variáveis livres zeradas e null_basis gera o conjunto de soluções. Em NONE os dois campos ficam vazios
   """
   status:SolveStatus
   particular:tuple[Fraction,...] | None = None
   null_basis:tuple[tuple[Fraction,...],...] = field(default_factory=tuple)

   @property
   def is_unique(self)->bool:
      return self.status is SolveStatus.UNIQUE


def _rref_rows(rows:list[list[Fraction]], n_cols:int)->tuple[list[list[Fraction]], list[int]]:
   """
   Eliminação de Gauss-Jordan in place. O pivô é a primeira entrada não nula descendo pela coluna,
   não precisa de pivotamento por magnitude já que a aritmética é exata
   """
   n_rows = len(rows)
   pivots:list[int] = []
   piv_r = 0
   for piv_c in range(n_cols):
      if piv_r == n_rows:
         break
      for i_row in range(piv_r, n_rows):
         if rows[i_row][piv_c] != 0:
            break
      else:
         continue #coluna livre
      if i_row != piv_r:
         rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]

      pivot_row = rows[piv_r]
      fp = pivot_row[piv_c]
      if fp != 1:
         pivot_row[:] = [x / fp for x in pivot_row]

      for r in range(n_rows):
         if r == piv_r:
            continue
         fr = rows[r][piv_c]
         if fr == 0:
            continue
         current = rows[r]
         for c in range(piv_c, n_cols):
            if pivot_row[c] != 0:
               current[c] -= fr * pivot_row[c]
      pivots.append(piv_c)
      piv_r += 1
   return rows, pivots

def rref(A:RatMatrix)->RrefResult:
   """
   Calcula a forma escalonada reduzida (única) de A

   Args:
      A (RatMatrix): matriz não vazia

   Return:
      (RrefResult): posto, colunas pivô e a matriz reduzida
   """
   if A.rows == 0 or A.cols == 0:
      raise ValueError("rref precisa de uma matriz não vazia")
   rows, pivots = _rref_rows(A.to_rows(), A.cols)
   return RrefResult(rank=len(pivots), pivots=tuple(pivots), reduced=RatMatrix.from_rows(rows))

def normalize_integer_vector(vector:Sequence[Fraction])->tuple[Fraction,...]:
   """
   Escala um vetor para ter entradas inteiras com mdc 1 e a primeira entrada não nula positiva.
   Deixa a base do núcleo determinística
   """
   values = [Fraction(x) for x in vector]
   nonzero = [x for x in values if x != 0]
   if not nonzero:
      return tuple(values)
   common_den = lcm(*(x.denominator for x in nonzero))
   integers = [int(x * common_den) for x in values]
   common_div = gcd(*(abs(x) for x in integers if x != 0))
   sign = 1 if next(x for x in integers if x != 0) > 0 else -1
   return tuple(Fraction(sign * x // common_div) for x in integers)

def _null_basis_from_reduced(rows:list[list[Fraction]], pivots:list[int], n_cols:int)->list[tuple[Fraction,...]]:
   pivot_set = set(pivots)
   basis:list[tuple[Fraction,...]] = []
   for free in range(n_cols):
      if free in pivot_set:
         continue
      vec = [Fraction(0)] * n_cols
      vec[free] = Fraction(1)
      for r, c in enumerate(pivots): #x_c = -R[r][free]
         vec[c] = -rows[r][free]
      basis.append(normalize_integer_vector(vec))
   return basis

def null_space(A:RatMatrix)->list[tuple[Fraction,...]]:
   """
   Base do núcleo {v : A·v = 0}. Cada vetor vem de uma variável livre (vetor unitário com retro substituição),
   depois normalizado para inteiros com mdc 1 e primeira entrada positiva. Lista vazia sse posto = número de colunas
   """
   if A.rows == 0 or A.cols == 0:
      raise ValueError("null_space precisa de uma matriz não vazia")
   rows, pivots = _rref_rows(A.to_rows(), A.cols)
   return _null_basis_from_reduced(rows, pivots, A.cols)

def solve(A:RatMatrix, b:Sequence)->LinearSolution:
   """
   Classifica e resolve A·x = b exatamente

   Args:
      A (RatMatrix): matriz do sistema
      b (Sequence): lado direito, com tamanho igual ao número de linhas de A

   Return:
      (LinearSolution): NONE se inconsistente, UNIQUE se posto(A) = colunas, senão UNDERDETERMINED
   """
   if len(b) != A.rows:
      raise ValueError(f"lado direito de tamanho {len(b)} para uma matriz com {A.rows} linhas")
   n_cols = A.cols
   augmented = [list(A.row(i)) + [Fraction(b[i])] for i in range(A.rows)]
   rows, pivots = _rref_rows(augmented, n_cols + 1)

   if pivots and pivots[-1] == n_cols: #pivô na coluna do lado direito: posto(A) < posto([A|b])
      return LinearSolution(SolveStatus.NONE)

   particular = [Fraction(0)] * n_cols
   for r, c in enumerate(pivots):
      particular[c] = rows[r][n_cols]

   if len(pivots) == n_cols:
      return LinearSolution(SolveStatus.UNIQUE, tuple(particular))

   reduced_A = [row[:n_cols] for row in rows]
   basis = _null_basis_from_reduced(reduced_A, pivots, n_cols)
   return LinearSolution(SolveStatus.UNDERDETERMINED, tuple(particular), tuple(basis))
