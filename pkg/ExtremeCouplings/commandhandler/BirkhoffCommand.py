from argparse import ArgumentParser, Namespace
from enumeration import verify_birkhoff
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class BirkhoffCommand(AbstractCommand):
   """
   Confere que os vértices das matrizes bistocásticas m x m são exatamente as (1/m) P_sigma
   """

   NAME = "birkhoff"
   HELP = "compara os vértices de K(uniforme, uniforme) com as matrizes de permutação"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("m", type=int, help="tamanho dos espaços")
      parser.add_argument("--budget", type=int, default=None, help="máximo de subconjuntos de órbitas a examinar")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      report = verify_birkhoff(args.m, args.budget)
      run_log.add_step("verify_birkhoff", report.count, f"esperado {report.expected_count}")
      return CommandResult(report.to_dict(), 0, arguments={"m": args.m, "budget": args.budget})
