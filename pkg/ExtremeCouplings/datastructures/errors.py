"""
Exceções do projeto. Dois ramos: entradas inválidas (InvalidInputError, código de saída 2 na CLI)
e limites de recursos estourados (ResourceLimitError, código de saída 3 na CLI)
"""


class InvalidInputError(ValueError):
   """Entrada malformada: arquivo de instância, parâmetro de linha de comando ou argumento de função"""


class CouplingValidationError(InvalidInputError):
   """
   Matriz que não pertence a K(mu1, mu2). Carrega a lista de violações encontradas
   """

   def __init__(self, violations:list) -> None:
      self.violations = list(violations)
      messages = "; ".join(str(v) for v in self.violations)
      super().__init__(f"acoplamento inválido: {messages}")


class InvalidP(InvalidInputError):
   """Parâmetro p fora do intervalo aberto (0, 1/2)"""


class DomainError(InvalidInputError):
   """Argumento fora do domínio da função (ex: t fora de [0,1] em F_p)"""


class ZeroCertificate(InvalidInputError):
   """Função zeta identicamente nula, não serve como certificado"""


class EmptySupport(InvalidInputError):
   """Acoplamento sem nenhuma célula de massa positiva"""


class ResourceLimitError(RuntimeError):
   """Um limite de tamanho configurado foi atingido"""


class CapExceeded(ResourceLimitError):
   """O fecho do grupo cresceu além do cap configurado"""

   def __init__(self, cap:int) -> None:
      self.cap = cap
      super().__init__(f"fecho do grupo passou do cap de {cap} elementos")


class BudgetExceeded(ResourceLimitError):
   """O número de subconjuntos de órbitas a testar passou do orçamento"""

   def __init__(self, required:int, budget:int) -> None:
      self.required = required
      self.budget = budget
      super().__init__(f"enumeração precisa de {required} resoluções restritas, orçamento é {budget}")


class SizeCapExceeded(ResourceLimitError):
   """Espaço truncado 2^depth maior que o cap configurado"""

   def __init__(self, size:int, cap:int) -> None:
      self.size = size
      self.cap = cap
      super().__init__(f"espaço truncado de tamanho {size} passa do cap de {cap}")
