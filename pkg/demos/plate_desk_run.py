"""Supersonic flow past a plate at an attack angle, desk-scale grid.

The plate is an infinitely thin slip wall between two rows of points.
Prints the pressure jump across the plate, which is what the
compression on the lower side and the expansion on the upper side produce.
"""

import numpy as np

from sweepweno.cases import case_spec
from sweepweno.solver import SchemeConfig, run

case = case_spec(9)
problem = case.problem(desk=True)
grid = problem.disc.grid
model = problem.disc.model
summary, history, state = run(problem, SchemeConfig("fe_sweep", 0.6, problem.tol))
print(case.name, f"{grid.nx}x{grid.ny}:", summary.outcome, "in", summary.iterations, "iterations")

p = model.pressure(state[(slice(None), *grid.interior)])
p_inf = model.pressure(problem.initial[:, 0, 0])
j_below = int(round((0.0 - grid.bounds[2]) / grid.dy)) - 1
on_plate = (grid.xs[grid.ghost:grid.ghost + grid.nx] > 1.0) & (grid.xs[grid.ghost:grid.ghost + grid.nx] < 2.0)
print("p / p_inf below the plate:", np.round(p[on_plate, j_below] / p_inf, 3))
print("p / p_inf above the plate:", np.round(p[on_plate, j_below + 1] / p_inf, 3))
