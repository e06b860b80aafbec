from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from fractions import Fraction
from math import isfinite
from pathlib import Path
import sys
from typing import Any
from datastructures import InvalidInputError
from exactarith import parse_rational
from symmetry import ActionGenerator, OrbitDecomposition, close_group, decompose_orbits
from instancefiles import InstanceFile
from coupling_config import CommandRunLog


@dataclass
class CommandResult:
   """
   Resultado de um comando: corpo do relatório, código de saída e, opcionalmente, um conteúdo extra (CSV ou arquivo de
   instância) que vai para o stdout no lugar do relatório
   """
   body:dict
   exit_code:int = 0
   digest:str | None = None
   payload:str | None = None
   arguments:dict[str,Any] = field(default_factory=dict)


class AbstractCommand(ABC):
   """
   Classe abstrata e interface dos comandos da CLI. Cada subclasse declara seus argumentos e implementa run, que recebe
   os argumentos já parseados e o log da execução para registrar as etapas
   """

   NAME:str
   HELP:str

   @classmethod
   @abstractmethod
   def add_arguments(cls, parser:ArgumentParser)->None:
      pass

   @abstractmethod
   def run(self, args:Namespace, run_log:CommandRunLog)->CommandResult:
      pass

   #utilidades compartilhadas pelos comandos que leem uma instância

   def _load_instance(self, path:str, run_log:CommandRunLog)->InstanceFile:
      """
      Lê o arquivo de instância, "-" lê do stdin
      """
      if path == "-":
         try:
            text = sys.stdin.read()
         except UnicodeDecodeError as e:
            raise InvalidInputError(f"stdin: instância não é UTF-8 ({e.reason})") from e
         instance = InstanceFile.model_validate_json(text)
      else:
         instance = InstanceFile.load(Path(path))
      run_log.add_step("load_instance", 1, f"{instance.x1_size}x{instance.x2_size}, {len(instance.group_generators)} geradores")
      return instance

   def _generators(self, instance:InstanceFile)->list[ActionGenerator]:
      return [ActionGenerator.create(g1, g2, instance.x1_size, instance.x2_size) for g1, g2 in instance.generators()]

   def _orbits(self, instance:InstanceFile, group_cap:int | None, run_log:CommandRunLog)->OrbitDecomposition:
      closure = close_group(self._generators(instance), instance.x1_size, instance.x2_size, group_cap)
      orbits = decompose_orbits(instance.x1_size, instance.x2_size, closure)
      run_log.add_step("group_closure", closure.size, f"m1={orbits.m1}, m2={orbits.m2}, m12={orbits.m12}")
      return orbits

   @staticmethod
   def _parse_rational_arg(text:str, label:str)->Fraction:
      try:
         return parse_rational(text)
      except InvalidInputError as e:
         raise InvalidInputError(f"--{label}: {e}") from e

   @staticmethod
   def _parse_real_arg(text:str, label:str)->Fraction | float:
      """
      Aceita racionais "a/b" (exatos) ou decimais como 0.375
      """
      try:
         return parse_rational(text)
      except InvalidInputError:
         pass
      try:
         value = float(text)
      except ValueError:
         raise InvalidInputError(f"--{label}: valor numérico inválido {text!r}")
      if not isfinite(value):
         raise InvalidInputError(f"--{label}: valor precisa ser finito, recebido {text!r}")
      return value
