from argparse import ArgumentParser, Namespace
from io import StringIO
from pathlib import Path
from dyadic import DyadicSpec, sample_transformed_pairs, write_samples_csv, sample_diagnostics
from coupling_config import CommandRunLog, get_config_or
from .AbstractCommand import AbstractCommand, CommandResult


class FpSampleCommand(AbstractCommand):
   """
   Amostra pares (xi', eta') e escreve o CSV. O relatório leva os diagnósticos de Kolmogorov-Smirnov
   """

   NAME = "fp-sample"
   HELP = "amostra pares (F_p(xi~), F_p(eta~)) em CSV"

   @classmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      parser.add_argument("--p", required=True, help="racional em (0, 1/2)")
      parser.add_argument("--count", type=int, required=True, help="número de pares")
      parser.add_argument("--seed", type=int, default=None, help="seed do gerador")
      parser.add_argument("--depth", type=int, default=None, help="dígitos binários sorteados por par")
      parser.add_argument("--tol", type=float, default=None, help="tolerância de F_p")
      parser.add_argument("--out", default=None, help="arquivo CSV (padrão: stdout, relatório vai para o stderr)")

   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      spec = DyadicSpec(self._parse_rational_arg(args.p, "p"))
      seed = get_config_or("DEFAULT_SEED", args.seed)
      depth = get_config_or("FP_SAMPLE_DEPTH", args.depth)
      samples = sample_transformed_pairs(spec, args.count, seed, depth, args.tol)
      run_log.add_step("sample", len(samples), f"seed {seed}, profundidade {depth}")

      payload = None
      if args.out is not None:
         write_samples_csv(samples, Path(args.out), spec, seed, depth)
      else:
         buffer = StringIO()
         write_samples_csv(samples, buffer, spec, seed, depth)
         payload = buffer.getvalue()

      diagnostics = sample_diagnostics(samples)
      body = {
         "p": str(spec.p),
         "count": len(samples),
         "seed": seed,
         "sample_depth": depth,
         "out": args.out,
         "diagnostics": diagnostics.to_dict()
      }
      return CommandResult(body, 0, payload=payload, arguments={"p": args.p, "count": args.count, "seed": args.seed, "depth": args.depth, "out": args.out})
