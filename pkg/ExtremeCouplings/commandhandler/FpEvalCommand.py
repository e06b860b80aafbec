from argparse import ArgumentParser, Namespace
from dyadic import eval_Fp, truncation_depth
from coupling_config import CommandRunLog, get_config_or
from .AbstractCommand import AbstractCommand, CommandResult


class FpEvalCommand(AbstractCommand):

   NAME = "fp-eval"
   HELP = "avalia a função de distribuição singular F_p em um ponto"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("--p", required=True, help="racional ou decimal em (0, 1)")
      parser.add_argument("--t", required=True, help="ponto em [0, 1]")
      parser.add_argument("--tol", type=float, default=None, help="tolerância absoluta")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      p = self._parse_real_arg(args.p, "p")
      t = self._parse_real_arg(args.t, "t")
      tol = get_config_or("FP_DEFAULT_TOL", args.tol)
      value = eval_Fp(p, t, tol)
      depth = truncation_depth(float(p), tol)
      run_log.add_step("eval_Fp", 1, f"profundidade {depth}")
      body = {"p": args.p, "t": args.t, "tol": tol, "depth": depth, "value": value}
      return CommandResult(body, 0, arguments={"p": args.p, "t": args.t, "tol": args.tol})
