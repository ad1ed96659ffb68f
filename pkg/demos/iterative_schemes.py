"""Three ways to reach the same steady state.

FE Jacobi, TVD RK3 Jacobi and FE fast sweeping on the 2D Euler problem
without source.  All three land on the same discrete solution; what differs
is the number of iterations (an RK3 iteration counts its three stages).
"""

import numpy as np

from sweepweno.cases import case_spec
from sweepweno.solver import SchemeConfig, run

case = case_spec(5)
n = 20
finals = {}
for kind, cfl in case.table_cfl.items():
    problem = case.problem(nx=n)
    summary, history, state = run(problem, SchemeConfig(kind, cfl, case.tol))
    (ref,) = case.reference(kind, n=n)
    finals[kind] = state[(0, *problem.disc.grid.interior)]
    print(f"{kind:>11}  cfl {cfl:<4} {summary.outcome:>10}  iterations {summary.iterations:>6} "
          f"(table {ref.iterations})  L1(rho) {summary.errors['L1']:.3e}")

    # residue every few hundred iterations
    res = np.asarray(history.resA)
    marks = np.unique(np.linspace(0, len(res) - 1, 6).astype(int))
    print("             ResA", "  ".join(f"{history.iteration[k]}:{res[k]:.1e}" for k in marks))

gap = max(np.max(np.abs(finals[a] - finals["fe_sweep"])) for a in finals)
print(f"\nlargest density difference between the converged fields: {gap:.1e}")
