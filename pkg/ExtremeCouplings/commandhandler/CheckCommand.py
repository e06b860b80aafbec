from argparse import ArgumentParser, Namespace
from datastructures import Coupling, InvalidInputError, CouplingValidationError
from exactarith import format_rational
from couplings import collect_violations, is_graphic
from extremality import test_extreme, verify_certificate, rectangle_certificate
from instancefiles import verdict_to_dict, matrix_to_rows
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class CheckCommand(AbstractCommand):
   """
   Valida o omega da instância e decide se ele é ponto extremo, com certificado quando não é
   """

   NAME = "check"
   HELP = "valida omega e testa se é ponto extremo de K(mu1, mu2)"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("instance", help="arquivo JSON da instância (\"-\" lê do stdin)")
      parser.add_argument("--fail-if-not-extreme", action="store_true", help="sai com código 1 se omega não for extremo")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      instance = self._load_instance(args.instance, run_log)
      matrix = instance.omega_matrix()
      if matrix is None:
         raise InvalidInputError("check precisa de uma instância com omega")
      mu1, mu2 = instance.marginals()
      orbits = self._orbits(instance, args.group_cap, run_log)

      violations = collect_violations(matrix, mu1, mu2, orbits)
      run_log.add_step("validate", len(violations), "violações encontradas")
      if violations:
         raise CouplingValidationError(violations)

      c = Coupling(matrix, mu1, mu2)
      verdict = test_extreme(c, orbits)
      problems = verify_certificate(c, verdict, orbits)
      run_log.add_step("test_extreme", verdict.support_orbit_count, f"extremo={verdict.extreme}, núcleo={verdict.null_dim}")

      body = {
         "valid": True,
         "violations": [],
         "orbit_counts": {"m1": orbits.m1, "m2": orbits.m2, "m12": orbits.m12},
         "verdict": verdict_to_dict(verdict, orbits),
         "graphic": is_graphic(c).to_dict(),
         "certificate_problems": problems
      }
      if not verdict.extreme and orbits.is_trivial: #perturbação elementar só para o grupo trivial
         rectangle = rectangle_certificate(c)
         if rectangle is not None:
            body["rectangle"] = {
               "rows": list(rectangle.rows),
               "cols": list(rectangle.cols),
               "step": format_rational(rectangle.step),
               "omega_plus": matrix_to_rows(rectangle.omega_plus.matrix),
               "omega_minus": matrix_to_rows(rectangle.omega_minus.matrix)
            }

      exit_code = 1 if args.fail_if_not_extreme and not verdict.extreme else 0
      return CommandResult(body, exit_code, instance.digest(), arguments={"instance": args.instance, "fail_if_not_extreme": args.fail_if_not_extreme})
