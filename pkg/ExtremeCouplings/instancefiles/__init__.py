from .InstanceFile import InstanceFile, GroupGenerator
from .reports import (
   matrix_to_rows, coupling_to_dict, verdict_to_dict, violations_to_list, vertex_set_to_dict, decomposition_to_dict,
   build_report, report_to_json, matrix_frame, render_pretty
)
