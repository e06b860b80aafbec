from fractions import Fraction
from typing import Any, Sequence
import json
import pandas as pd
from datastructures import Coupling, Violation
from exactarith import RatMatrix, format_rational, format_vector
from symmetry import OrbitDecomposition
from couplings import is_graphic
from extremality import ExtremalityVerdict
from enumeration import VertexSet

"""
Serialização dos relatórios da CLI. Os relatórios são JSON primeiro: racionais como strings "a/b" em termos mínimos,
listas de vértices na ordem canônica da enumeração. O modo --pretty desenha as partes tabulares com pandas
"""


def matrix_to_rows(matrix:RatMatrix)->list[list[str]]:
   return [format_vector(row) for row in matrix.to_rows()]

def coupling_to_dict(c:Coupling)->dict:
   return {
      "omega": matrix_to_rows(c.matrix),
      "support": [list(cell) for cell in c.sorted_support()],
      "graphic": is_graphic(c).to_dict()
   }

def verdict_to_dict(verdict:ExtremalityVerdict, orbits:OrbitDecomposition)->dict:
   report:dict[str,Any] = {
      "extreme": verdict.extreme,
      "null_dim": verdict.null_dim,
      "support_orbit_count": verdict.support_orbit_count,
      "support_orbits": [[list(cell) for cell in orbits.orbits12[k]] for k in verdict.support_orbits]
   }
   if verdict.certificate is not None:
      certificate = verdict.certificate
      report["certificate"] = {
         "zeta": format_vector(certificate.zeta),
         "epsilon": format_rational(certificate.epsilon),
         "omega_plus": matrix_to_rows(certificate.omega_plus.matrix),
         "omega_minus": matrix_to_rows(certificate.omega_minus.matrix)
      }
   return report

def violations_to_list(violations:Sequence[Violation])->list[dict]:
   return [v.to_dict() for v in violations]

def vertex_set_to_dict(vs:VertexSet)->dict:
   return {
      "count": len(vs),
      "window": list(vs.window),
      "subsets_examined": vs.subsets_examined,
      "subsets_solved": vs.subsets_solved,
      "vertices": [
         {
            "support_orbits": sorted(vs.supports[k]),
            "orbit_count": len(vs.supports[k]),
            **coupling_to_dict(vertex)
         }
         for k, vertex in enumerate(vs.vertices)
      ]
   }

def decomposition_to_dict(pieces:Sequence[tuple[Fraction,Coupling]])->dict:
   return {
      "count": len(pieces),
      "pieces": [
         {"weight": format_rational(weight), **coupling_to_dict(vertex)}
         for weight, vertex in pieces
      ]
   }

def build_report(command:str, arguments:dict, body:dict, timing:dict, digest:str | None = None)->dict:
   """
   Monta o relatório final: eco do comando, digest da instância (quando existe), resultado e tempos
   """
   report:dict[str,Any] = {"command": command, "arguments": arguments}
   if digest is not None:
      report["instance_digest"] = digest
   report["result"] = body
   report["timing"] = timing
   return report

def report_to_json(report:dict)->str:
   return json.dumps(report, indent=2, ensure_ascii=False)

#modo --pretty

def matrix_frame(matrix:RatMatrix | Sequence[Sequence[str]])->pd.DataFrame:
   rows = matrix_to_rows(matrix) if isinstance(matrix, RatMatrix) else [list(r) for r in matrix]
   frame = pd.DataFrame(rows)
   frame.index.name = "x1"
   frame.columns.name = "x2"
   return frame

def _render_value(key:str, value:Any, indent:str)->list[str]:
   if isinstance(value, list) and value and all(isinstance(r, list) for r in value) and key.startswith("omega"):
      table = matrix_frame(value).to_string()
      return [f"{indent}{key}:"] + [indent + "   " + line for line in table.splitlines()]
   if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
      flat = pd.DataFrame([{k: v for k, v in item.items() if not isinstance(v, (list, dict))} for item in value])
      lines = [f"{indent}{key}:"]
      if not flat.empty and len(flat.columns):
         lines += [indent + "   " + line for line in flat.to_string().splitlines()]
      for k, item in enumerate(value):
         nested = {name: v for name, v in item.items() if isinstance(v, (list, dict))}
         if nested:
            lines.append(f"{indent}   [{k}]")
            for name, v in nested.items():
               lines += _render_value(name, v, indent + "      ")
      return lines
   if isinstance(value, dict):
      lines = [f"{indent}{key}:"]
      for name, v in value.items():
         lines += _render_value(name, v, indent + "   ")
      return lines
   return [f"{indent}{key}: {value}"]

def render_pretty(report:dict)->str:
   """
   Versão legível do relatório: matrizes omega como tabelas e listas de registros como DataFrames
   """
   lines:list[str] = []
   for key, value in report.items():
      lines += _render_value(key, value, "")
   return "\n".join(lines)
