from dataclasses import dataclass
from fractions import Fraction
from math import ceil, isfinite, log
import numpy as np
from datastructures import DomainError, InvalidInputError
from coupling_config import get_config_or

"""
Função de distribuição F_p de um número em [0,1] cujos dígitos binários são iid com P(dígito = 1) = q = 1 - p.
F_p é avaliada pela auto-similaridade F(t) = p F(2t) para t < 1/2 e F(t) = p + q F(2t - 1) para t >= 1/2,
truncada na profundidade d em que max(p,q)^d <= tol. Tudo aqui é ponto flutuante (binary64)
"""


def _check_p(p)->tuple[float,float]:
   try:
      p = float(Fraction(p))
   except (ValueError, OverflowError, TypeError) as e:
      raise InvalidInputError(f"p inválido: {p!r}") from e
   if not (0 < p < 1):
      raise InvalidInputError(f"p deve estar em (0, 1), recebido {p}")
   return p, 1.0 - p

def _check_tol(tol)->float:
   tol = float(tol)
   if not (tol > 0 and isfinite(tol)):
      raise InvalidInputError(f"tolerância deve ser positiva e finita, recebida {tol}")
   return tol

def truncation_depth(p:float, tol:float)->int:
   """
   Menor d com max(p,q)^d <= tol, o resto da recursão depois de d passos é limitado por max(p,q)^d
   """
   return max(1, ceil(log(tol) / log(max(p, 1.0 - p))))

def eval_Fp(p:Fraction|float, t:Fraction|float, tol:float|None = None)->float:
   """
   F_p(t) com erro absoluto até tol

   Args:
      p (Fraction|float): em (0, 1), p = 1/2 dá a identidade
      t (Fraction|float): ponto em [0, 1]
      tol (float|None): tolerância, padrão FP_DEFAULT_TOL da config

   Return:
      (float): F_p(t), com F(0) = 0 e F(1) = 1 exatos
   """
   p, q = _check_p(p)
   tol = _check_tol(get_config_or("FP_DEFAULT_TOL", tol))
   t = float(t)
   if not (0.0 <= t <= 1.0):
      raise DomainError(f"t deve estar em [0, 1], recebido {t}")
   if t == 0.0:
      return 0.0
   if t == 1.0:
      return 1.0

   acc = 0.0
   weight = 1.0
   for _ in range(truncation_depth(p, tol)):
      if t < 0.5:
         weight *= p
         t = 2 * t
      else: #t = 1/2 fica no ramo de cima, F(1/2) = p
         acc += weight * p
         weight *= q
         t = 2 * t - 1
   return acc + weight * t

def eval_Fp_array(p:Fraction|float, ts, tol:float|None = None)->np.ndarray:
   """
   Versão vetorizada de eval_Fp, mesmos passos em todos os pontos do array
   """
   p, q = _check_p(p)
   tol = _check_tol(get_config_or("FP_DEFAULT_TOL", tol))
   t = np.asarray(ts, dtype=np.float64)
   if np.any((t < 0.0) | (t > 1.0)) or np.any(np.isnan(t)):
      raise DomainError("todos os pontos devem estar em [0, 1]")

   zero = t == 0.0
   one = t == 1.0
   acc = np.zeros_like(t)
   weight = np.ones_like(t)
   current = t.copy()
   for _ in range(truncation_depth(p, tol)):
      upper = current >= 0.5
      acc = acc + np.where(upper, weight * p, 0.0)
      weight = weight * np.where(upper, q, p)
      current = np.where(upper, 2 * current - 1, 2 * current)
   result = acc + weight * current
   result[zero] = 0.0
   result[one] = 1.0
   return result


@dataclass(frozen=True)
class FpGridReport:
   p:float
   points:int
   tol:float
   min_step:float #menor F(t_{k+1}) - F(t_k), monotonia se >= -2 tol
   endpoints_exact:bool
   self_similarity_error:float #max |F(t) - p F(2t)| para t < 1/2 e |F(t) - p - q F(2t-1)| para t >= 1/2
   identity_error:float | None = None #max |F(t) - t|, só para p = 1/2

   @property
   def monotone(self)->bool:
      return self.min_step >= -2 * self.tol

   @property
   def passed(self)->bool:
      identity_ok = self.identity_error is None or self.identity_error <= self.tol
      return self.monotone and self.endpoints_exact and self.self_similarity_error <= 2 * self.tol and identity_ok

   def to_dict(self)->dict:
      return {
         "p": self.p,
         "points": self.points,
         "tol": self.tol,
         "min_step": self.min_step,
         "monotone": self.monotone,
         "endpoints_exact": self.endpoints_exact,
         "self_similarity_error": self.self_similarity_error,
         "identity_error": self.identity_error,
         "passed": self.passed
      }


def check_Fp_grid(p:Fraction|float, points:int = 1001, tol:float|None = None)->FpGridReport:
   """
   Checagens numéricas de F_p numa grade uniforme de [0,1]: monotonia (até 2 tol), F(0) = 0 e F(1) = 1 exatos,
   identidade de auto-similaridade nos dois ramos e, para p = 1/2, distância para a identidade
   """
   if points < 2:
      raise InvalidInputError("a grade precisa de pelo menos 2 pontos")
   tol = _check_tol(get_config_or("FP_DEFAULT_TOL", tol))
   p_float, q_float = _check_p(p)

   grid = np.linspace(0.0, 1.0, points)
   values = eval_Fp_array(p, grid, tol)
   lower = grid < 0.5
   doubled = eval_Fp_array(p, np.where(lower, 2 * grid, 2 * grid - 1), tol)
   expected = np.where(lower, p_float * doubled, p_float + q_float * doubled)

   identity_error = float(np.max(np.abs(values - grid))) if Fraction(p) == Fraction(1, 2) else None
   return FpGridReport(
      p=p_float,
      points=points,
      tol=tol,
      min_step=float(np.min(np.diff(values))),
      endpoints_exact=bool(values[0] == 0.0 and values[-1] == 1.0),
      self_similarity_error=float(np.max(np.abs(values - expected))),
      identity_error=identity_error
   )
