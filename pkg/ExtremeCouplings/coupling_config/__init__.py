from .coupling_config import get_config, get_config_or
from .logging import CommandRunLog, StepLog
