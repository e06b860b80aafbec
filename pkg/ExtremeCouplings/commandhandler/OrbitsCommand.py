from argparse import ArgumentParser, Namespace
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class OrbitsCommand(AbstractCommand):

   NAME = "orbits"
   HELP = "lista as órbitas de X1, X2 e X1 x X2 pela ação diagonal"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("instance", help="arquivo JSON da instância (\"-\" lê do stdin)")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      instance = self._load_instance(args.instance, run_log)
      orbits = self._orbits(instance, args.group_cap, run_log)
      return CommandResult(orbits.to_dict(), 0, instance.digest(), arguments={"instance": args.instance})
