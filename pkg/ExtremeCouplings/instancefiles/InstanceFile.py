import hashlib
import json
from pathlib import Path
from typing import Any, Sequence
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from datastructures import Marginal, Coupling, InvalidInputError
from exactarith import RatMatrix, parse_rational, format_rational

"""
Formato do arquivo de instância (JSON UTF-8). Racionais sempre como strings "a/b" ou "a", nunca floats
"""


def _canonical_rational(value:Any)->str:
   if isinstance(value, bool) or not isinstance(value, (str, int)): #floats perderiam a exatidão
      raise ValueError(f"racional deve ser uma string 'a/b' ou inteiro, recebido {value!r}")
   return format_rational(parse_rational(str(value)))


class GroupGenerator(BaseModel):
   """
   Gerador da ação diagonal: g1 é a permutação de X1, g2 a de X2
   """
   model_config = ConfigDict(extra="forbid")

   g1:list[int]
   g2:list[int]


class InstanceFile(BaseModel):
   """
   Instância de K(mu1, mu2): tamanhos dos espaços, marginais, geradores do grupo e opcionalmente um acoplamento omega.
   Os racionais são guardados já reduzidos, então serializar o modelo lido devolve a forma canônica do arquivo
   """
   model_config = ConfigDict(extra="forbid")

   x1_size:int = Field(ge=1)
   x2_size:int = Field(ge=1)
   mu1:list[str]
   mu2:list[str]
   group_generators:list[GroupGenerator] = Field(default_factory=list)
   omega:list[list[str]] | None = None

   @field_validator("mu1", "mu2", mode="before")
   @classmethod
   def parse_marginal(cls, value:Any)->list[str]:
      if not isinstance(value, list):
         raise ValueError("marginal deve ser uma lista de racionais")
      return [_canonical_rational(x) for x in value]

   @field_validator("omega", mode="before")
   @classmethod
   def parse_omega(cls, value:Any)->list[list[str]] | None:
      if value is None:
         return None
      if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
         raise ValueError("omega deve ser uma matriz (lista de listas) de racionais")
      return [[_canonical_rational(x) for x in row] for row in value]

   @model_validator(mode="after")
   def check_shapes(self)->'InstanceFile':
      if len(self.mu1) != self.x1_size:
         raise ValueError(f"mu1 tem {len(self.mu1)} entradas, x1_size é {self.x1_size}")
      if len(self.mu2) != self.x2_size:
         raise ValueError(f"mu2 tem {len(self.mu2)} entradas, x2_size é {self.x2_size}")
      for index, generator in enumerate(self.group_generators):
         if sorted(generator.g1) != list(range(self.x1_size)):
            raise ValueError(f"g1 do gerador {index} não é uma permutação de 0..{self.x1_size - 1}")
         if sorted(generator.g2) != list(range(self.x2_size)):
            raise ValueError(f"g2 do gerador {index} não é uma permutação de 0..{self.x2_size - 1}")
      if self.omega is not None:
         if len(self.omega) != self.x1_size or any(len(row) != self.x2_size for row in self.omega):
            raise ValueError(f"omega deve ser uma matriz {self.x1_size}x{self.x2_size}")
      self.marginals() #massas negativas ou soma diferente de 1 viram erro de validação aqui
      return self

   #conversões para os tipos do domínio

   def marginals(self)->tuple[Marginal,Marginal]:
      return (
         Marginal(parse_rational(x) for x in self.mu1),
         Marginal(parse_rational(x) for x in self.mu2)
      )

   def generators(self)->list[tuple[list[int],list[int]]]:
      return [(g.g1, g.g2) for g in self.group_generators]

   def omega_matrix(self)->RatMatrix | None:
      if self.omega is None:
         return None
      return RatMatrix.from_rows([[parse_rational(x) for x in row] for row in self.omega])

   #leitura e escrita

   @classmethod
   def load(cls, path:str | Path)->'InstanceFile':
      try:
         text = Path(path).read_text(encoding="utf-8")
      except UnicodeDecodeError as e:
         raise InvalidInputError(f"{path}: arquivo de instância não é UTF-8 ({e.reason} no byte {e.start})") from e
      return cls.model_validate_json(text)

   @classmethod
   def from_coupling(cls, c:Coupling, generators:Sequence[tuple[Sequence[int],Sequence[int]]] = ())->'InstanceFile':
      return cls(
         x1_size=c.n1,
         x2_size=c.n2,
         mu1=[format_rational(x) for x in c.mu1],
         mu2=[format_rational(x) for x in c.mu2],
         group_generators=[GroupGenerator(g1=list(g1), g2=list(g2)) for g1, g2 in generators],
         omega=[[format_rational(x) for x in row] for row in c.to_rows()]
      )

   def to_dict(self)->dict:
      return self.model_dump(exclude_none=True)

   def to_json(self)->str:
      """
      JSON canônico: chaves ordenadas, racionais reduzidos
      """
      return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

   def dump(self, path:str | Path)->None:
      Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

   def digest(self)->str:
      """
      sha256 do JSON canônico compacto, identifica a instância nos relatórios
      """
      compact = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
      return hashlib.sha256(compact.encode("utf-8")).hexdigest()
