from argparse import ArgumentParser, Namespace
from dataclasses import replace
from datastructures import Coupling
from couplings import strip_zero_mass
from symmetry import close_group, decompose_orbits
from enumeration import enumerate_extreme, check_support_bounds, check_support_uniqueness
from instancefiles import vertex_set_to_dict
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class EnumerateCommand(AbstractCommand):
   """
   Enumera os pontos extremos da instância e roda as checagens de janela de suporte e unicidade pelo suporte.
   Pontos de massa marginal zero são removidos antes da busca e os vértices voltam para os índices originais
   """

   NAME = "enumerate"
   HELP = "enumera os pontos extremos de K(mu1, mu2)"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("instance", help="arquivo JSON da instância (\"-\" lê do stdin)")
      parser.add_argument("--budget", type=int, default=None, help="máximo de subconjuntos de órbitas a examinar")
      parser.add_argument("--workers", type=int, default=1, help="processos para a busca")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      instance = self._load_instance(args.instance, run_log)
      mu1, mu2 = instance.marginals()
      stripped = strip_zero_mass(list(mu1), list(mu2), instance.generators())
      n1, n2 = len(stripped.keep1), len(stripped.keep2)

      closure = close_group(stripped.generators, n1, n2, args.group_cap)
      orbits = decompose_orbits(n1, n2, closure)
      run_log.add_step("group_closure", closure.size, f"m1={orbits.m1}, m2={orbits.m2}, m12={orbits.m12}")

      vertices = enumerate_extreme(stripped.mu1, stripped.mu2, orbits, args.budget, workers=args.workers)
      run_log.add_step("enumerate", len(vertices), f"{vertices.subsets_solved} sistemas resolvidos")
      bounds = check_support_bounds(vertices, orbits)
      uniqueness = check_support_uniqueness(vertices)

      embedded = tuple(Coupling(stripped.embed_matrix(v.matrix), mu1, mu2) for v in vertices)
      body = {
         "orbit_counts": {"m1": orbits.m1, "m2": orbits.m2, "m12": orbits.m12},
         **vertex_set_to_dict(replace(vertices, vertices=embedded)),
         "support_bounds": bounds.to_dict(),
         "support_uniqueness": uniqueness.to_dict()
      }
      if stripped.stripped_anything:
         body["kept_points"] = {"x1": list(stripped.keep1), "x2": list(stripped.keep2)}

      return CommandResult(body, 0, instance.digest(), arguments={"instance": args.instance, "budget": args.budget, "workers": args.workers})
