from .AbstractCommand import AbstractCommand, CommandResult
from .CommandHandler import CommandHandler, EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID_INPUT, EXIT_RESOURCE_LIMIT
