from enum import Enum

"""
Enums gerais que identificam tipos de resultados (classificação de sistemas lineares, formato do suporte, violações)
"""



class SolveStatus(Enum): #classificação de um sistema linear A·x = b
   NONE = "none"
   UNIQUE = "unique"
   UNDERDETERMINED = "underdetermined"

class GraphicKind(Enum): #formato do suporte de um acoplamento
   FORWARD = "graph_of_map_forward"
   BACKWARD = "graph_of_map_backward"
   BOTH = "both"
   NEITHER = "neither"

   @classmethod
   def from_string(cls,kind_string:str):
        """
        Retorna um objeto do ENUM a partir da string usada nos relatórios
        """
        for member in GraphicKind:
            if member.value == kind_string:
                return member
        raise ValueError(f"{kind_string} não é uma string válida para essa enum")

class ViolationKind(Enum): #tipos de falha na validação de um acoplamento
   DIMENSION_MISMATCH = "dimension_mismatch"
   NEGATIVE_ENTRY = "negative_entry"
   ROW_SUM_MISMATCH = "row_sum_mismatch"
   COLUMN_SUM_MISMATCH = "column_sum_mismatch"
   ORBIT_NOT_CONSTANT = "orbit_not_constant"
   MARGINAL_NOT_INVARIANT = "marginal_not_invariant"
