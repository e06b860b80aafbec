from fractions import Fraction
from typing import Iterable, Sequence


class RatMatrix:
   """
   Matriz densa de racionais exatos, guardada em ordem row-major numa tupla. As dimensões e as entradas
   não mudam depois da construção, então objetos dessa classe podem ser compartilhados livremente
   """

   __slots__ = ("rows","cols","entries")

   rows:int
   cols:int
   entries:tuple[Fraction,...]

   def __init__(self, rows:int, cols:int, entries:Iterable) -> None:
      entries = tuple(Fraction(x) for x in entries)
      if rows < 0 or cols < 0:
         raise ValueError("dimensões da matriz não podem ser negativas")
      if len(entries) != rows * cols:
         raise ValueError(f"matriz {rows}x{cols} precisa de {rows*cols} entradas, recebeu {len(entries)}")
      object.__setattr__(self,"rows",rows)
      object.__setattr__(self,"cols",cols)
      object.__setattr__(self,"entries",entries)

   def __setattr__(self, name, value):
      raise AttributeError("RatMatrix é imutável")

   def __reduce__(self):
      return (RatMatrix, (self.rows, self.cols, self.entries)) #pickle sem passar pelo __setattr__

   #construtores alternativos

   @classmethod
   def from_rows(cls, rows:Sequence[Sequence]) -> 'RatMatrix':
      rows = [list(r) for r in rows]
      n_rows = len(rows)
      n_cols = len(rows[0]) if rows else 0
      for r in rows:
         if len(r) != n_cols:
            raise ValueError("todas as linhas precisam ter o mesmo tamanho")
      return cls(n_rows, n_cols, [x for r in rows for x in r])

   @classmethod
   def zeros(cls, rows:int, cols:int) -> 'RatMatrix':
      return cls(rows, cols, [0] * (rows * cols))

   @classmethod
   def identity(cls, n:int) -> 'RatMatrix':
      return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

   #acesso

   def __getitem__(self, index:tuple[int,int]) -> Fraction:
      i, j = index
      if not (0 <= i < self.rows and 0 <= j < self.cols):
         raise IndexError(f"índice ({i},{j}) fora da matriz {self.rows}x{self.cols}")
      return self.entries[i * self.cols + j]

   def row(self, i:int) -> tuple[Fraction,...]:
      return self.entries[i * self.cols:(i + 1) * self.cols]

   def col(self, j:int) -> tuple[Fraction,...]:
      return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

   def to_rows(self) -> list[list[Fraction]]:
      return [list(self.row(i)) for i in range(self.rows)]

   def cells(self) -> Iterable[tuple[int,int,Fraction]]:
      for i in range(self.rows):
         for j in range(self.cols):
            yield i, j, self.entries[i * self.cols + j]

   @property
   def shape(self) -> tuple[int,int]:
      return (self.rows, self.cols)

   #operações

   def transpose(self) -> 'RatMatrix':
      return RatMatrix(self.cols, self.rows, [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

   def select_columns(self, columns:Sequence[int]) -> 'RatMatrix':
      return RatMatrix(self.rows, len(columns), [self.entries[i * self.cols + j] for i in range(self.rows) for j in columns])

   def hstack(self, other:'RatMatrix') -> 'RatMatrix':
      if other.rows != self.rows:
         raise ValueError("hstack precisa de matrizes com o mesmo número de linhas")
      return RatMatrix.from_rows([list(self.row(i)) + list(other.row(i)) for i in range(self.rows)])

   def apply(self, vector:Sequence) -> list[Fraction]:
      """
      Produto matriz x vetor, exato
      """
      if len(vector) != self.cols:
         raise ValueError(f"vetor de tamanho {len(vector)} não combina com {self.cols} colunas")
      return [sum((a * Fraction(x) for a, x in zip(self.row(i), vector)), Fraction(0)) for i in range(self.rows)]

   def scale(self, factor) -> 'RatMatrix':
      factor = Fraction(factor)
      return RatMatrix(self.rows, self.cols, [x * factor for x in self.entries])

   def __add__(self, other:'RatMatrix') -> 'RatMatrix':
      if self.shape != other.shape:
         raise ValueError("soma de matrizes com dimensões diferentes")
      return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

   def __sub__(self, other:'RatMatrix') -> 'RatMatrix':
      if self.shape != other.shape:
         raise ValueError("subtração de matrizes com dimensões diferentes")
      return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

   def rank(self) -> int:
      from .linear_algebra import rref
      return rref(self).rank

   def __eq__(self, other) -> bool:
      if not isinstance(other, RatMatrix):
         return NotImplemented
      return self.shape == other.shape and self.entries == other.entries

   def __hash__(self) -> int:
      return hash((self.rows, self.cols, self.entries))

   def __repr__(self) -> str:
      return f"RatMatrix({self.rows}x{self.cols}, {[[str(x) for x in r] for r in self.to_rows()]})"
