from dataclasses import dataclass
from typing import Sequence
import logging
import numpy as np
import pandas as pd
from scipy import stats
from datastructures import InvalidInputError
from coupling_config import get_config, get_config_or
from .DyadicSpec import DyadicSpec, SamplePair
from .SampleCollection import SampleCollection
from .singular_cdf import eval_Fp_array

logger = logging.getLogger(__name__)


def _draw_tilde(spec:DyadicSpec, count:int, rng:np.random.Generator, sample_depth:int)->tuple[np.ndarray,np.ndarray]:
   """
   Sorteia (xi, eta) do acoplamento base e os dígitos zeta_1..zeta_depth, devolvendo as expansões truncadas
   xi~ = xi/2 + sum zeta_j / 2^(j+1) e eta~ com os mesmos zeta
   """
   p, q = float(spec.p), float(spec.q)
   cell = rng.choice(3, size=count, p=[p, p, q - p]) #células (0,1), (1,0), (1,1) do acoplamento base
   xi = np.array([0, 1, 1])[cell]
   eta = np.array([1, 0, 1])[cell]

   digits = (rng.random((count, sample_depth)) < q).astype(np.float64) #P(dígito = 1) = q
   weights = 0.5 ** np.arange(2, sample_depth + 2)
   tail = digits @ weights
   return xi / 2 + tail, eta / 2 + tail

def sample_transformed_pairs(
   spec:DyadicSpec,
   count:int,
   seed:int|None = None,
   sample_depth:int|None = None,
   tol:float|None = None
)->list[SamplePair]:
   """
   Amostra pares (xi', eta') = (F_p(xi~), F_p(eta~)). A mesma seed sempre gera a mesma lista

   Args:
      spec (DyadicSpec): parâmetro p (a profundidade da truncagem do acoplamento não é usada aqui)
      count (int): número de pares, >= 1
      seed (int|None): seed do gerador PCG64 do numpy, padrão DEFAULT_SEED da config
      sample_depth (int|None): dígitos zeta sorteados por par, >= FP_MIN_SAMPLE_DEPTH, padrão FP_SAMPLE_DEPTH
      tol (float|None): tolerância de F_p

   Return:
      (list[SamplePair]): pares em [0,1]^2
   """
   seed = get_config_or("DEFAULT_SEED", seed)
   sample_depth = get_config_or("FP_SAMPLE_DEPTH", sample_depth)
   if count < 1:
      raise InvalidInputError(f"count deve ser >= 1, recebido {count}")
   minimum:int = get_config("FP_MIN_SAMPLE_DEPTH")
   if sample_depth < minimum:
      raise InvalidInputError(f"profundidade da amostra deve ser >= {minimum}, recebida {sample_depth}")

   rng = np.random.default_rng(seed)
   xi_tilde, eta_tilde = _draw_tilde(spec, count, rng, sample_depth)
   xi_prime = eval_Fp_array(spec.p, xi_tilde, tol)
   eta_prime = eval_Fp_array(spec.p, eta_tilde, tol)
   logger.debug("%d pares amostrados com seed %d", count, seed)
   return [SamplePair(float(a), float(b)) for a, b in zip(xi_prime, eta_prime)]

def samples_to_frame(samples:Sequence[SamplePair])->pd.DataFrame:
   """
   DataFrame com as colunas do CSV, validado pelo schema de SampleCollection
   """
   columns:list[str] = get_config("SAMPLE_CSV_COLUMNS")
   df = pd.DataFrame(
      {
         columns[0]: [s.xi_prime for s in samples],
         columns[1]: [s.eta_prime for s in samples]
      },
      dtype=np.float64
   )
   return SampleCollection.DF_SCHEMA.validate(df)

def write_samples_csv(samples:Sequence[SamplePair], target, spec:DyadicSpec, seed:int, sample_depth:int)->SampleCollection:
   """
   Escreve as amostras em CSV (caminho ou buffer) e devolve a coleção escrita
   """
   collection = SampleCollection(spec, seed, sample_depth, samples_to_frame(samples))
   collection.to_csv(target)
   return collection


@dataclass(frozen=True)
class SampleDiagnostics:
   count:int
   ks_xi:float #distância de Kolmogorov-Smirnov de xi' para a uniforme
   ks_eta:float
   ks_two_sample:float #distância entre as distribuições empíricas de xi' e eta'
   equal_fraction:float #fração de pares com xi' = eta'
   ks_tolerance:float

   @property
   def within_tolerance(self)->bool:
      return max(self.ks_xi, self.ks_eta) <= self.ks_tolerance

   def to_dict(self)->dict:
      return {
         "count": self.count,
         "ks_xi_uniform": self.ks_xi,
         "ks_eta_uniform": self.ks_eta,
         "ks_two_sample": self.ks_two_sample,
         "equal_fraction": self.equal_fraction,
         "ks_tolerance": self.ks_tolerance,
         "within_tolerance": self.within_tolerance
      }


def sample_diagnostics(samples:Sequence[SamplePair], ks_tolerance:float|None = None)->SampleDiagnostics:
   """
   Estatísticas de KS das duas coordenadas contra a uniforme, KS de duas amostras entre elas e a fração de pares
   na diagonal (xi' = eta' exatamente quando o par base caiu em (1,1))
   """
   ks_tolerance = get_config_or("KS_TOLERANCE", ks_tolerance)
   xi = np.array([s.xi_prime for s in samples])
   eta = np.array([s.eta_prime for s in samples])
   if xi.size == 0:
      raise InvalidInputError("diagnóstico precisa de pelo menos uma amostra")
   return SampleDiagnostics(
      count=int(xi.size),
      ks_xi=float(stats.kstest(xi, "uniform").statistic),
      ks_eta=float(stats.kstest(eta, "uniform").statistic),
      ks_two_sample=float(stats.ks_2samp(xi, eta).statistic),
      equal_fraction=float(np.mean(xi == eta)),
      ks_tolerance=float(ks_tolerance)
   )
