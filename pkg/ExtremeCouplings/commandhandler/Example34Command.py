from argparse import ArgumentParser, Namespace
from pathlib import Path
from couplings import is_graphic
from extremality import test_extreme
from symmetry import trivial_orbits
from dyadic import DyadicSpec, truncated_coupling
from instancefiles import InstanceFile
from coupling_config import CommandRunLog
from .AbstractCommand import AbstractCommand, CommandResult


class Example34Command(AbstractCommand):
   """
   Gera o acoplamento de dois pontos truncado na profundidade pedida como arquivo de instância, que o próprio
   comando check consegue ler. Com --check também decide extremalidade e formato do suporte
   """

   NAME = "example34"
   HELP = "gera o acoplamento extremo não gráfico truncado (instância JSON)"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("--p", required=True, help="P(0) = p, racional em (0, 1/2)")
      parser.add_argument("--depth", type=int, default=1, help="profundidade da truncagem, espaço de tamanho 2^depth")
      parser.add_argument("--check", action="store_true", help="testa extremalidade e formato do suporte, código 1 se falhar")
      parser.add_argument("--out", default=None, help="arquivo para a instância (padrão: stdout, relatório vai para o stderr)")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      spec = DyadicSpec(self._parse_rational_arg(args.p, "p"), args.depth)
      c = truncated_coupling(spec)
      instance = InstanceFile.from_coupling(c)
      run_log.add_step("truncated_coupling", 1, f"{spec.size}x{spec.size}")

      body:dict = {"p": str(spec.p), "depth": spec.depth, "size": spec.size, "instance_digest": instance.digest()}
      exit_code = 0
      if args.check:
         verdict = test_extreme(c, trivial_orbits(c.n1, c.n2))
         graphic = is_graphic(c)
         body["check"] = {
            "extreme": verdict.extreme,
            "graphic": graphic.kind.value,
            "nongraphic": not graphic.is_graphic
         }
         run_log.add_step("check", 1, f"extremo={verdict.extreme}, gráfico={graphic.kind.value}")
         if not verdict.extreme or graphic.is_graphic:
            exit_code = 1

      payload = None
      if args.out is not None:
         instance.dump(Path(args.out))
         body["out"] = args.out
      else:
         payload = instance.to_json() + "\n"
      return CommandResult(body, exit_code, payload=payload, arguments={"p": args.p, "depth": args.depth, "check": args.check, "out": args.out})
