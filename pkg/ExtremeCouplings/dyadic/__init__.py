from .DyadicSpec import DyadicSpec, SamplePair
from .dyadic_couplings import base_coupling, truncated_coupling
from .singular_cdf import eval_Fp, eval_Fp_array, check_Fp_grid, truncation_depth, FpGridReport
from .SampleCollection import SampleCollection
from .sampling import (
   sample_transformed_pairs, samples_to_frame, write_samples_csv, sample_diagnostics, SampleDiagnostics
)
