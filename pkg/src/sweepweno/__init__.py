"""Fifth-order multi-resolution WENO steady-state solvers with fast sweeping.

The pieces, bottom up: :mod:`grid` (storage layout), :mod:`weno`
(reconstruction), :mod:`flux` (splitting and characteristic fluxes),
:mod:`models` (equation systems), :mod:`boundary` (ghost filling and
plates), :mod:`solver` (the three fixed-point drivers) and :mod:`cases`
(the benchmark registry).
"""

from .boundary import (
    BoundarySet, Dirichlet, Inflow, Outflow, Periodic, Plate, SlipWall, apply_boundary,
    extrapolate_degree4,
)
from .cases import CASES, CaseSpec, accuracy_table, case_spec, error_norms
from .flux import WaveSpeeds, lf_split, numerical_flux_line, wave_speeds
from .grid import Grid, build_grid
from .models import DivergenceError, Model, model, rankine_hugoniot_states
from .solver import (
    Discretization, Problem, ResidueHistory, RunSummary, SchemeConfig, SweepOrdering,
    average_residue, fe_jacobi_iteration, pseudo_time_step, rk3_jacobi_iteration, run,
    set_threads, solve_to_steady, spatial_operator, sweep_iteration,
)
from .weno import ReconstructionConfig, reconstruct_face_value

__version__ = "0.1.0"
