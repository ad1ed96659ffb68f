"""Command-line front end.

    sweepweno list
    sweepweno run --case 1 --scheme fe-sweep --cfl 1.0 --nx 40 --out run1
    sweepweno table --case 1 --scheme fe-sweep --cfl 1.0 --meshes 10,20,40

Exit status: 0 converged, 2 not convergent, 3 diverged, 1 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .cases import CASES, NoExactSolutionError, UnknownCaseError, accuracy_table, case_spec
from .solver import SchemeConfig, run, set_threads

EXIT_CODES = {"converged": 0, "not_convergent": 2, "diverged": 3}
USAGE_ERROR = 1
SCHEMES = ("fe-jacobi", "rk3-jacobi", "fe-sweep")
FLOAT_FMT = "%.15e"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _add_scheme_args(p):
    p.add_argument("--case", required=True, type=int)
    p.add_argument("--scheme", required=True, choices=SCHEMES)
    p.add_argument("--cfl", required=True, type=float)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--out", type=Path, default=Path("."))
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for the compiled kernels (sweeps stay sequential)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sweepweno", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("run", help="iterate one case to steady state")
    _add_scheme_args(p)
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--desk", action="store_true", help="use the reduced desk-scale grid and tolerance")
    p.add_argument("--dump-every", type=int, default=0, metavar="K",
                   help="also write field_<iteration>.csv every K iterations")

    p = sub.add_parser("table", help="mesh refinement table for a case with an exact solution")
    _add_scheme_args(p)
    p.add_argument("--meshes", required=True, help="comma separated point counts, e.g. 10,20,40")

    sub.add_parser("list", help="print the case catalogue")
    return parser


# -- writers ----------------------------------------------------------------------


def write_residue(path: Path, history) -> None:
    data = history.as_array()
    with open(path, "w") as fh:
        fh.write("iteration,resA,dt,time\n")
        for n, res, dt, t in data:
            fh.write(f"{int(n)},{FLOAT_FMT % res},{FLOAT_FMT % dt},{FLOAT_FMT % t}\n")


def write_field(path: Path, state, grid, components) -> None:
    X, Y = grid.mesh(interior_only=True)
    cols = [X.ravel()]
    header = ["x"]
    if grid.dim == 2:
        cols.append(Y.ravel())
        header.append("y")
    for k, name in enumerate(components):
        cols.append(state[(k, *grid.interior)].ravel())
        header.append(name)
    np.savetxt(path, np.column_stack(cols), delimiter=",", fmt=FLOAT_FMT,
               header=",".join(header), comments="")


def _fmt_optional(v):
    return "" if v is None else FLOAT_FMT % v


def write_accuracy(path: Path, rows) -> None:
    with open(path, "w") as fh:
        fh.write("N,L1,L1_order,Linf,Linf_order,iterations,wall_seconds\n")
        for r in rows:
            its = r.iterations if r.outcome == "converged" else r.outcome
            fh.write(",".join([
                str(r.n), FLOAT_FMT % r.l1, _fmt_optional(r.l1_order), FLOAT_FMT % r.linf,
                _fmt_optional(r.linf_order), str(its), FLOAT_FMT % r.wall_seconds,
            ]) + "\n")


# -- commands ------------------------------------------------------------------


def _case(args):
    try:
        return case_spec(args.case)
    except UnknownCaseError as exc:
        raise UsageError(str(exc.args[0])) from None


def _set_threads(n: int) -> None:
    if n < 1:
        raise UsageError("--threads must be at least 1")
    set_threads(n)


def run_command(args) -> int:
    case = _case(args)
    _set_threads(args.threads)
    if args.dump_every < 0:
        raise UsageError("--dump-every must be non-negative")
    try:
        problem = case.problem(nx=args.nx, ny=args.ny, desk=args.desk)
        config = SchemeConfig(args.scheme, args.cfl, args.tol or problem.tol, args.max_iters)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    grid = problem.disc.grid
    components = problem.disc.model.components

    callback = None
    if args.dump_every:
        last = [0]

        def callback(rec):
            # an RK3 step advances the count by 3, so dump on crossing a multiple
            if rec.iterations // args.dump_every > last[0] // args.dump_every:
                write_field(out / f"field_{rec.iterations}.csv", rec.state, grid, components)
            last[0] = rec.iterations

    summary, history, state = run(problem, config, callback)
    write_residue(out / "residue.csv", history)
    write_field(out / "field.csv", state, grid, components)
    with open(out / "summary.json", "w") as fh:
        json.dump(summary.as_dict(), fh, indent=2)
        fh.write("\n")
    print(f"case {case.id} {config.kind} cfl={config.cfl}: {summary.outcome} after "
          f"{summary.iterations} iterations, ResA={summary.final_resA:.3e}")
    return EXIT_CODES[summary.outcome]


def table_command(args) -> int:
    case = _case(args)
    _set_threads(args.threads)
    if not case.has_exact:
        raise UsageError(f"case {case.id} has no exact solution to measure errors against")
    try:
        meshes = [int(m) for m in args.meshes.split(",") if m.strip()]
    except ValueError:
        raise UsageError(f"bad --meshes value {args.meshes!r}") from None
    if not meshes:
        raise UsageError("--meshes is empty")
    try:
        config = SchemeConfig(args.scheme, args.cfl, args.tol or case.tol, args.max_iters)
        rows = accuracy_table(case, config, meshes)
    except (ValueError, NoExactSolutionError) as exc:
        raise UsageError(str(exc)) from None
    args.out.mkdir(parents=True, exist_ok=True)
    write_accuracy(args.out / "accuracy.csv", rows)
    for r in rows:
        print(f"N={r.n:5d} L1={r.l1:.3e} Linf={r.linf:.3e} iterations={r.iterations} {r.outcome}")
    return 0


def list_command(args=None) -> int:
    for c in CASES.values():
        print(f"{c.id:2d}  {c.name:<34s} {c.model_id:<16s} {c.grid_label():>8s}  tol={c.tol:.0e}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_ERROR
    commands = {"run": run_command, "table": table_command, "list": list_command}
    try:
        return commands[args.command](args)
    except UsageError as exc:
        print(f"sweepweno: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
