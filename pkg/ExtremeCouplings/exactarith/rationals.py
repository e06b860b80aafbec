from fractions import Fraction
from datastructures.errors import InvalidInputError
import re

"""
Escalares racionais exatos. Fraction já guarda o valor em termos mínimos com denominador positivo,
então Rational é só um alias, com funções para ler e escrever o formato de string "a/b" usado nos arquivos JSON
"""

Rational = Fraction

__RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text:str|int|Fraction)->Fraction:
   """
   Converte uma string "a/b" ou "a" (ou um int) em um racional exato. Floats não são aceitos, pois perderiam a exatidão

   Args:
      text (str|int|Fraction): valor a ser convertido

   Return:
      (Fraction): racional em termos mínimos
   """
   if isinstance(text,Fraction):
      return text
   if isinstance(text,bool): #bool é subclasse de int, mas não é um número válido aqui
      raise InvalidInputError(f"valor booleano não é um racional: {text}")
   if isinstance(text,int):
      return Fraction(text)
   if not isinstance(text,str):
      raise InvalidInputError(f"racionais devem ser strings 'a/b' ou inteiros, recebido: {text!r}")

   match = __RATIONAL_PATTERN.match(text)
   if match is None:
      raise InvalidInputError(f"string racional inválida: {text!r}")

   numerator = int(match.group(1))
   denominator = int(match.group(2)) if match.group(2) is not None else 1
   if denominator == 0:
      raise InvalidInputError(f"denominador zero na string racional: {text!r}")
   return Fraction(numerator,denominator)

def format_rational(value:Fraction|int)->str:
   """
   Escreve um racional como "a/b" (ou "a" se for inteiro), sempre em termos mínimos
   """
   value = Fraction(value)
   if value.denominator == 1:
      return str(value.numerator)
   return f"{value.numerator}/{value.denominator}"

def format_vector(values)->list[str]:
   return [format_rational(x) for x in values]
