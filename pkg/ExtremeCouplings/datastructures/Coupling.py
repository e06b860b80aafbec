from dataclasses import dataclass
from fractions import Fraction
from exactarith.RatMatrix import RatMatrix
from .DataEnums import GraphicKind, ViolationKind
from .Marginal import Marginal

"""
Tipos de dados de um elemento de K(mu1, mu2): o acoplamento validado, as violações de validação e o veredito sobre
o formato do suporte (gráfico ou não)
"""


Cell = tuple[int,int]


@dataclass(frozen=True)
class Coupling:
   """
   Distribuição conjunta em X1 x X2 com marginais fixas. Objetos dessa classe devem ser criados por couplings.validate
   (ou pelas construções do pacote couplings, que produzem acoplamentos válidos por construção)
   """

   matrix:RatMatrix
   mu1:Marginal
   mu2:Marginal

   @property
   def n1(self) -> int:
      return self.matrix.rows

   @property
   def n2(self) -> int:
      return self.matrix.cols

   def mass(self, x1:int, x2:int) -> Fraction:
      return self.matrix[x1, x2]

   @property
   def support(self) -> frozenset[Cell]:
      """
      Conjunto S(omega) de células com massa positiva
      """
      return frozenset((i, j) for i, j, value in self.matrix.cells() if value > 0)

   def sorted_support(self) -> list[Cell]:
      return sorted(self.support)

   def to_rows(self) -> list[list[Fraction]]:
      return self.matrix.to_rows()


@dataclass(frozen=True)
class Violation:
   """
   Uma falha de validação, apontando qual invariante quebrou e onde
   """
   kind:ViolationKind
   message:str
   location:tuple = ()

   def __str__(self) -> str:
      return self.message

   def to_dict(self) -> dict:
      return {"kind": self.kind.value, "message": self.message, "location": list(self.location)}


@dataclass(frozen=True)
class GraphicVerdict:
   """
   Resultado do teste de formato do suporte. forward_map leva x1 -> x2 quando cada linha tem exatamente uma célula
   no suporte, backward_map leva x2 -> x1 quando cada coluna tem exatamente uma
   """
   kind:GraphicKind
   forward_map:tuple[int,...] | None = None
   backward_map:tuple[int,...] | None = None

   @property
   def is_graphic(self) -> bool:
      return self.kind is not GraphicKind.NEITHER

   def to_dict(self) -> dict:
      return {
         "kind": self.kind.value,
         "forward_map": list(self.forward_map) if self.forward_map is not None else None,
         "backward_map": list(self.backward_map) if self.backward_map is not None else None
      }
