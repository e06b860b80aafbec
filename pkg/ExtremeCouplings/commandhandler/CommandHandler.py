from argparse import ArgumentParser, Namespace
from typing import TextIO, Type
import inspect
import json
import logging
import sys
from pydantic import ValidationError
from datastructures import InvalidInputError, CouplingValidationError, ResourceLimitError, BudgetExceeded
from instancefiles import build_report, report_to_json, render_pretty, violations_to_list
from coupling_config import CommandRunLog, get_config
from .AbstractCommand import AbstractCommand, CommandResult
from .CheckCommand import CheckCommand
from .EnumerateCommand import EnumerateCommand
from .BirkhoffCommand import BirkhoffCommand
from .OrbitsCommand import OrbitsCommand
from .Example34Command import Example34Command
from .FpEvalCommand import FpEvalCommand
from .FpSampleCommand import FpSampleCommand
from .DecomposeCommand import DecomposeCommand

logger = logging.getLogger(__name__)

ALL_IMPORTED_CLASSES = [object_name for object_name in dir() if inspect.isclass(globals()[object_name])] #lista todas as classes importadas no escopo global do Python

#códigos de saída da CLI
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_LIMIT = 3


class CommandHandler:
   """
   Monta o parser da linha de comando a partir das classes de comando importadas e executa o comando pedido,
   traduzindo exceções nos códigos de saída e escrevendo o relatório JSON (ou a versão --pretty)
   """

   __command_map: dict[str,Type[AbstractCommand]] #dict que mapea o nome do subcomando à classe que o implementa

   def __init__(self) -> None:
      self.__command_map = {
         cls.NAME: cls for cls in map(globals().get, self.__get_all_command_classes())
      }

   def __command_class_is_valid(self, class_name:str)->bool:
      obj = globals()[class_name]
      return issubclass(obj, AbstractCommand) and not inspect.isabstract(obj)

   def __get_all_command_classes(self)->list[str]:
      return list(filter(self.__command_class_is_valid, ALL_IMPORTED_CLASSES))

   @property
   def command_names(self)->list[str]:
      return sorted(self.__command_map.keys())

   def build_parser(self)->ArgumentParser:
      parser = ArgumentParser(prog="extreme-couplings", description="Pontos extremos de acoplamentos invariantes com marginais fixas")
      parser.add_argument("--pretty", action="store_true", help="relatório em tabelas legíveis no lugar do JSON")
      parser.add_argument("--log-file", default=get_config("DEFAULT_LOG_FILE"), help="arquivo onde o log da execução é acrescentado")
      parser.add_argument("--group-cap", type=int, default=None, help="tamanho máximo do fecho do grupo")

      subparsers = parser.add_subparsers(dest="command", required=True)
      for name in self.command_names:
         command_class = self.__command_map[name]
         command_class.add_arguments(subparsers.add_parser(name, help=command_class.HELP))
      return parser

   def parse(self, argv:list[str])->Namespace:
      return self.build_parser().parse_args(argv)

   def __error_body(self, error:Exception)->dict:
      body:dict = {"error": type(error).__name__, "message": str(error)}
      if isinstance(error, CouplingValidationError):
         body["violations"] = violations_to_list(error.violations)
      if isinstance(error, BudgetExceeded):
         body["required_budget"] = error.required
         body["budget"] = error.budget
      if isinstance(error, ValidationError):
         body["details"] = [{"location": [str(x) for x in e["loc"]], "message": e["msg"]} for e in error.errors()]
      return body

   def __write(self, report:dict, pretty:bool, stream:TextIO)->None:
      stream.write(render_pretty(report) if pretty else report_to_json(report))
      stream.write("\n")

   def execute(self, args:Namespace, stdout:TextIO | None = None, stderr:TextIO | None = None)->tuple[int,CommandRunLog]:
      """
      Executa o comando já parseado

      Args:
         args (Namespace): argumentos vindos de parse
         stdout (TextIO|None): saída do relatório (ou do CSV/instância), padrão sys.stdout
         stderr (TextIO|None): saída do relatório quando o stdout recebe o CSV/instância, padrão sys.stderr

      Return:
         (tuple[int,CommandRunLog]): código de saída e log da execução
      """
      stdout = stdout if stdout is not None else sys.stdout
      stderr = stderr if stderr is not None else sys.stderr
      run_log = CommandRunLog(args.command)
      command = self.__command_map[args.command]()

      error:Exception
      try:
         result:CommandResult = command.run(args, run_log)
      except (InvalidInputError, ValidationError, json.JSONDecodeError, OSError) as e:
         code, error = EXIT_INVALID_INPUT, e
      except ResourceLimitError as e:
         code, error = EXIT_RESOURCE_LIMIT, e
      else:
         run_log.finish()
         report = build_report(args.command, result.arguments, result.body, run_log.timing(), result.digest)
         if result.payload is not None:
            stdout.write(result.payload)
            self.__write(report, args.pretty, stderr)
         else:
            self.__write(report, args.pretty, stdout)
         run_log.extra_info = f"exit code {result.exit_code}"
         return result.exit_code, run_log

      logger.info("comando %s falhou: %s", args.command, error)
      error_log = CommandRunLog.error_log(args.command, f"exit code {code}: {error}")
      error_log.step_logs = run_log.step_logs
      error_log.start_date = run_log.start_date
      error_log.finish()
      report = build_report(args.command, {}, self.__error_body(error), error_log.timing())
      self.__write(report, args.pretty, stdout)
      return code, error_log
