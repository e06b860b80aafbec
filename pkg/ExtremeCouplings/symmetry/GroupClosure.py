from collections import deque
from dataclasses import dataclass
from typing import Sequence
import logging
from coupling_config import get_config_or
from datastructures.errors import CapExceeded, InvalidInputError

logger = logging.getLogger(__name__)

Permutation = tuple[int,...]


def _check_permutation(perm:Sequence[int], n:int, label:str)->Permutation:
   perm = tuple(int(x) for x in perm)
   if len(perm) != n:
      raise InvalidInputError(f"{label} tem tamanho {len(perm)}, o espaço tem {n} pontos")
   if sorted(perm) != list(range(n)):
      raise InvalidInputError(f"{label} não é uma permutação de 0..{n-1}: {list(perm)}")
   return perm


@dataclass(frozen=True)
class ActionGenerator:
   """
   Um elemento g do grupo agindo simultaneamente em X1 (perm1) e em X2 (perm2)
   """
   perm1:Permutation
   perm2:Permutation

   @classmethod
   def create(cls, perm1:Sequence[int], perm2:Sequence[int], n1:int, n2:int)->'ActionGenerator':
      """
      Cria um gerador checando que as duas componentes são bijeções dos conjuntos de índices
      """
      return cls(_check_permutation(perm1, n1, "g1"), _check_permutation(perm2, n2, "g2"))

   @classmethod
   def identity(cls, n1:int, n2:int)->'ActionGenerator':
      return cls(tuple(range(n1)), tuple(range(n2)))

   def compose(self, other:'ActionGenerator')->'ActionGenerator':
      """
      Composição self ∘ other (aplica other primeiro)
      """
      return ActionGenerator(
         tuple(self.perm1[x] for x in other.perm1),
         tuple(self.perm2[x] for x in other.perm2)
      )

   def inverse(self)->'ActionGenerator':
      inv1 = [0] * len(self.perm1)
      inv2 = [0] * len(self.perm2)
      for i, x in enumerate(self.perm1):
         inv1[x] = i
      for i, x in enumerate(self.perm2):
         inv2[x] = i
      return ActionGenerator(tuple(inv1), tuple(inv2))

   def act_on_cell(self, x1:int, x2:int)->tuple[int,int]:
      return (self.perm1[x1], self.perm2[x2]) #ação diagonal


@dataclass(frozen=True)
class GroupClosure:
   elements:tuple[ActionGenerator,...]

   @property
   def size(self)->int:
      return len(self.elements)

   @property
   def n1(self)->int:
      return len(self.elements[0].perm1)

   @property
   def n2(self)->int:
      return len(self.elements[0].perm2)


def close_group(generators:Sequence[ActionGenerator], n1:int, n2:int, cap:int|None = None)->GroupClosure:
   """
   Fecho do grupo gerado pelos geradores, por busca em largura a partir da identidade. Para um grupo finito o fecho por
   composição já contém os inversos. A ordem dos elementos é a ordem de inserção na busca

   Args:
      generators (Sequence[ActionGenerator]): geradores, todos com dimensões (n1, n2)
      n1 (int): tamanho de X1
      n2 (int): tamanho de X2
      cap (int|None): tamanho máximo aceito do grupo, padrão GROUP_CLOSURE_CAP da config

   Return:
      (GroupClosure): todos os elementos do grupo
   """
   cap = get_config_or("GROUP_CLOSURE_CAP", cap)
   for g in generators:
      if len(g.perm1) != n1 or len(g.perm2) != n2:
         raise InvalidInputError("gerador com dimensões diferentes dos espaços")

   identity = ActionGenerator.identity(n1, n2)
   elements:list[ActionGenerator] = [identity]
   seen:set[ActionGenerator] = {identity}
   queue:deque[ActionGenerator] = deque([identity])

   while queue:
      current = queue.popleft()
      for g in generators:
         candidate = g.compose(current)
         if candidate in seen:
            continue
         seen.add(candidate)
         elements.append(candidate)
         queue.append(candidate)
         if len(elements) > cap:
            raise CapExceeded(cap)

   logger.debug("fecho do grupo com %d elementos a partir de %d geradores", len(elements), len(generators))
   return GroupClosure(tuple(elements))
