from argparse import ArgumentParser, Namespace
from datastructures import Coupling, InvalidInputError
from exactarith import RatMatrix
from couplings import validate
from extremality import decompose
from instancefiles import decomposition_to_dict
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class DecomposeCommand(AbstractCommand):
   """
   Escreve o omega da instância como combinação convexa de pontos extremos
   """

   NAME = "decompose"
   HELP = "decompõe omega em combinação convexa de pontos extremos"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("instance", help="arquivo JSON da instância (\"-\" lê do stdin)")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      instance = self._load_instance(args.instance, run_log)
      matrix = instance.omega_matrix()
      if matrix is None:
         raise InvalidInputError("decompose precisa de uma instância com omega")
      mu1, mu2 = instance.marginals()
      orbits = self._orbits(instance, args.group_cap, run_log)
      c:Coupling = validate(matrix, mu1, mu2, orbits)

      pieces = decompose(c, orbits)
      run_log.add_step("decompose", len(pieces), "vértices na combinação")

      total = RatMatrix.zeros(c.n1, c.n2)
      for weight, vertex in pieces:
         total = total + vertex.matrix.scale(weight)
      body = {**decomposition_to_dict(pieces), "exact": total == c.matrix}
      return CommandResult(body, 0, instance.digest(), arguments={"instance": args.instance})
