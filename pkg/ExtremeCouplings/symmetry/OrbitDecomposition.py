from dataclasses import dataclass, field
from .GroupClosure import GroupClosure, ActionGenerator

Cell = tuple[int,int]


@dataclass(frozen=True)
class OrbitDecomposition:
   """
   Órbitas de X1, X2 e X1 x X2 (ação diagonal). Cada órbita é uma tupla ordenada e as órbitas estão ordenadas pelo
   menor elemento (ordem lexicográfica no caso das células), então o representante de cada órbita é o seu primeiro elemento
   """
   n1:int
   n2:int
   orbits1:tuple[tuple[int,...],...]
   orbits2:tuple[tuple[int,...],...]
   orbits12:tuple[tuple[Cell,...],...]
   cell_orbit:dict = field(compare=False, repr=False) #célula -> índice da órbita em orbits12

   @property
   def m1(self)->int:
      return len(self.orbits1)

   @property
   def m2(self)->int:
      return len(self.orbits2)

   @property
   def m12(self)->int:
      return len(self.orbits12)

   @property
   def is_trivial(self)->bool:
      """
      Só o grupo trivial deixa todas as células fixas
      """
      return all(len(o) == 1 for o in self.orbits12)

   def orbit_of_cell(self, x1:int, x2:int)->int:
      return self.cell_orbit[(x1, x2)]

   def to_dict(self)->dict:
      return {
         "m1": self.m1,
         "m2": self.m2,
         "m12": self.m12,
         "orbits1": [list(o) for o in self.orbits1],
         "orbits2": [list(o) for o in self.orbits2],
         "orbits12": [[list(c) for c in o] for o in self.orbits12]
      }


def _point_orbits(n:int, images)->tuple[tuple[int,...],...]:
   seen:set[int] = set()
   orbits:list[tuple[int,...]] = []
   for x in range(n): #o primeiro ponto não visto é sempre o menor da sua órbita
      if x in seen:
         continue
      orbit = tuple(sorted(set(images(x))))
      seen.update(orbit)
      orbits.append(orbit)
   return tuple(orbits)

def decompose_orbits(n1:int, n2:int, closure:GroupClosure)->OrbitDecomposition:
   """
   Particiona X1, X2 e X1 x X2 em órbitas. Como o fecho é um grupo, a imagem de um ponto por todos os elementos
   já é a órbita inteira

   Args:
      n1 (int): tamanho de X1
      n2 (int): tamanho de X2
      closure (GroupClosure): fecho do grupo para esses tamanhos

   Return:
      (OrbitDecomposition): as três partições e os contadores m1, m2, m12
   """
   if closure.n1 != n1 or closure.n2 != n2:
      raise ValueError("fecho do grupo não combina com os tamanhos dos espaços")
   elements = closure.elements

   orbits1 = _point_orbits(n1, lambda x: (g.perm1[x] for g in elements))
   orbits2 = _point_orbits(n2, lambda x: (g.perm2[x] for g in elements))

   cell_orbit:dict[Cell,int] = {}
   orbits12:list[tuple[Cell,...]] = []
   for x1 in range(n1):
      for x2 in range(n2):
         if (x1, x2) in cell_orbit:
            continue
         orbit = tuple(sorted({g.act_on_cell(x1, x2) for g in elements}))
         for cell in orbit:
            cell_orbit[cell] = len(orbits12)
         orbits12.append(orbit)

   return OrbitDecomposition(n1, n2, orbits1, orbits2, tuple(orbits12), cell_orbit)

def trivial_orbits(n1:int, n2:int)->OrbitDecomposition:
   """
   Órbitas do grupo trivial: todos os pontos e células são órbitas unitárias
   """
   return decompose_orbits(n1, n2, GroupClosure((ActionGenerator.identity(n1, n2),)))
