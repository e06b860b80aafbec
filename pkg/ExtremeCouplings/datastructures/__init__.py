from .errors import (
   InvalidInputError, CouplingValidationError, InvalidP, DomainError, ZeroCertificate, EmptySupport,
   ResourceLimitError, CapExceeded, BudgetExceeded, SizeCapExceeded
)
from .DataEnums import SolveStatus, GraphicKind, ViolationKind
from .Marginal import Marginal
from .Coupling import Coupling, Violation, GraphicVerdict, Cell
