from dataclasses import dataclass, field
from datastructures import Coupling


@dataclass(frozen=True)
class VertexSet:
   """
   Pontos extremos de K(mu1, mu2) achados pela enumeração, ordenados pelo bitmask do suporte (órbita i <-> bit i).
   supports[k] são os índices das órbitas no suporte de vertices[k]
   """
   vertices:tuple[Coupling,...]
   supports:tuple[frozenset[int],...]
   subsets_examined:int = 0
   subsets_solved:int = 0
   window:tuple[int,int] = field(default=(0, 0))

   def __len__(self)->int:
      return len(self.vertices)

   def __iter__(self):
      return iter(self.vertices)

   @property
   def stats(self)->list[int]:
      """
      N(omega) de cada vértice
      """
      return [len(s) for s in self.supports]

   def support_bitmask(self, k:int)->int:
      return sum(1 << i for i in self.supports[k])
