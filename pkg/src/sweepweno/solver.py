"""Fixed-point drivers for the steady discrete equations L(u) = 0.

Three iterations are provided: forward-Euler Jacobi, TVD-RK3 Jacobi and
the forward-Euler fast sweeping (Gauss-Seidel) scheme with four
alternating orderings.  One "iteration" is one update of every grid point,
so an RK3 step counts as three.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Optional

import numpy as np

from . import _kernels as K
from .boundary import BoundarySet, apply_boundary, wall_masks
from .flux import WaveSpeeds, kernel_params, wave_speeds
from .grid import Grid
from .models import DivergenceError, Model
from .weno import DEFAULT_CONFIG, ReconstructionConfig

SCHEME_KINDS = ("fe_jacobi", "rk3_jacobi", "fe_sweep")

# TVD-RK3 stage coefficients
RK3_STAGE2 = (0.75, 0.25)
RK3_STAGE3 = (1.0 / 3.0, 2.0 / 3.0)


@dataclass(frozen=True)
class SchemeConfig:
    kind: str
    cfl: float
    tol: float = 1e-12
    max_iterations: int = 100_000
    # absolute bound on max|u|; None means 1e6 times the initial maximum
    divergence_guard: Optional[float] = None

    def __post_init__(self):
        kind = self.kind.replace("-", "_")
        if kind not in SCHEME_KINDS:
            raise ValueError(f"unknown scheme {self.kind!r}; expected one of {SCHEME_KINDS}")
        object.__setattr__(self, "kind", kind)
        if not self.cfl > 0.0:
            raise ValueError("cfl must be positive")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


class SweepOrdering(enum.IntEnum):
    """Traversal directions of one sweep, cycled 1, 2, 3, 4, 1, ..."""

    I_UP_J_UP = 1
    I_DOWN_J_UP = 2
    I_DOWN_J_DOWN = 3
    I_UP_J_DOWN = 4

    @property
    def i_ascending(self) -> bool:
        return self in (SweepOrdering.I_UP_J_UP, SweepOrdering.I_UP_J_DOWN)

    @property
    def j_ascending(self) -> bool:
        return self in (SweepOrdering.I_UP_J_UP, SweepOrdering.I_DOWN_J_UP)

    def next(self) -> "SweepOrdering":
        return SweepOrdering(self % 4 + 1)


@dataclass
class ResidueHistory:
    iteration: list = field(default_factory=list)
    resA: list = field(default_factory=list)
    dt: list = field(default_factory=list)
    time: list = field(default_factory=list)

    def append(self, n: int, res: float, dt: float, time: float):
        self.iteration.append(n)
        self.resA.append(res)
        self.dt.append(dt)
        self.time.append(time)

    def __len__(self):
        return len(self.iteration)

    def as_array(self) -> np.ndarray:
        """Columns (iteration, resA, dt, time)."""
        return np.column_stack([self.iteration, self.resA, self.dt, self.time]).reshape(-1, 4)


@dataclass
class RunSummary:
    outcome: str
    iterations: int
    final_time: float
    final_resA: float
    errors: Optional[dict] = None
    scheme: str = ""
    cfl: float = 0.0

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "iterations": self.iterations,
            "final_time": self.final_time,
            "final_resA": self.final_resA,
            "errors": self.errors,
            "scheme": self.scheme,
            "cfl": self.cfl,
        }


class Step(NamedTuple):
    state: np.ndarray
    resA: float
    dt: float
    iterations: int
    increments: np.ndarray


# -- discretization -------------------------------------------------------------


class Discretization:
    """Model, grid and boundary set bound together with the kernel inputs."""

    def __init__(self, model: Model, grid: Grid, bset: BoundarySet,
                 reconstruction: ReconstructionConfig = DEFAULT_CONFIG):
        if model.dim != grid.dim:
            raise ValueError(f"{model.name} is {model.dim}D but the grid is {grid.dim}D")
        self.model = model
        self.grid = grid
        self.bset = bset
        self.reconstruction = reconstruction
        if model.aux is not None:
            X, Y = grid.mesh()
            self.aux = np.ascontiguousarray(np.broadcast_to(model.aux(X, Y), grid.shape), dtype=float)
        else:
            self.aux = np.zeros(grid.shape)
        self.wallx, self.wally = wall_masks(grid, bset.plates)
        self.has_walls = bool(bset.plates)

    @property
    def interior(self):
        return (slice(None), *self.grid.interior)

    def fill_ghosts(self, state: np.ndarray) -> np.ndarray:
        return apply_boundary(state, self.grid, self.bset, self.model.exact, self.model.admissible)

    def speeds(self, state: np.ndarray) -> WaveSpeeds:
        return wave_speeds(self.model, state, self.grid)

    def params(self, speeds: WaveSpeeds):
        return kernel_params(self.model, self.grid, speeds, self.reconstruction, self.has_walls)

    def new_state(self, interior_values) -> np.ndarray:
        """Storage array holding ``interior_values`` with ghosts filled."""
        U = self.grid.empty_state(self.model.m)
        U[self.interior] = np.asarray(interior_values, dtype=float).reshape(U[self.interior].shape)
        return self.fill_ghosts(U)


def _check(status):
    if status != K.OK:
        raise DivergenceError("non-physical state inside a stencil")


def spatial_operator(disc: Discretization, state: np.ndarray, alpha: WaveSpeeds,
                     at=None, freshness: str = "snapshot") -> np.ndarray:
    """Flux-difference operator plus source.

    ``at`` is a 1-based point index ``(i,)`` or ``(i, j)``; without it the
    whole interior is returned, shape ``(m, nx, ny)``.  ``freshness`` is
    ``"snapshot"`` (every face computed once from ``state``) or ``"live"``
    (each point recomputes its own faces, as inside a sweep).  Both read
    whatever ``state`` holds, ghosts included, so they only differ while a
    sweep is mutating the array.
    """
    if freshness not in ("snapshot", "live"):
        raise ValueError(f"freshness must be 'snapshot' or 'live', not {freshness!r}")
    U = np.ascontiguousarray(state, dtype=float)
    ip, fp = disc.params(alpha)
    g = disc.grid.ghost
    if at is not None:
        at = tuple(np.atleast_1d(at))
        i = int(at[0]) + g - 1
        j = int(at[1]) + g - 1 if disc.grid.dim == 2 else 0
        out = np.empty(disc.model.m)
        ws = K._scratch(disc.model.m)
        with np.errstate(all="ignore"):
            st = K.point_operator(U, i, j, ip, fp, disc.aux, disc.wallx, disc.wally, ws, out)
        if st != K.OK:
            out[:] = np.nan
        return out
    rhs = np.empty_like(U[disc.interior])
    if freshness != "snapshot":
        kernel = K.pointwise_operator
    elif _THREADS > 1:
        kernel = K.jacobi_operator_parallel
    else:
        kernel = K.jacobi_operator
    _check(kernel(U, rhs, ip, fp, disc.aux, disc.wallx, disc.wally))
    return rhs


_THREADS = 1


def set_threads(n: int) -> int:
    """Let snapshot (Jacobi) evaluations use up to ``n`` threads.

    Sweeps stay sequential. The threaded operator produces bitwise the same
    result as the serial one. Returns the thread count actually granted.
    """
    global _THREADS
    n = int(n)
    if n < 1:
        raise ValueError("thread count must be at least 1")
    if n > 1:
        import numba

        # an old TBB install only produces a warning before falling back
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
        n = min(n, numba.config.NUMBA_NUM_THREADS)
        numba.set_num_threads(n)
    _THREADS = n
    return n


def pseudo_time_step(cfl: float, alpha: WaveSpeeds, grid: Grid) -> float:
    rate = alpha.alpha_x / grid.dx
    if grid.dim == 2:
        rate += alpha.alpha_y / grid.dy
    return cfl / rate


def average_residue(increments: np.ndarray, dt: float) -> float:
    """Mean over points and components of ``|du| / dt``."""
    inc = np.asarray(increments, dtype=float)
    if inc.size == 0:
        return 0.0
    return float(np.mean(np.abs(inc)) / dt)


# -- one iteration of each driver ----------------------------------------------


def fe_jacobi_iteration(state: np.ndarray, disc: Discretization, config: SchemeConfig) -> Step:
    U = disc.fill_ghosts(np.array(state, dtype=float))
    speeds = disc.speeds(U)
    dt = pseudo_time_step(config.cfl, speeds, disc.grid)
    L = spatial_operator(disc, U, speeds)
    old = U[disc.interior].copy()
    U[disc.interior] = old + dt * L
    inc = U[disc.interior] - old
    return Step(U, average_residue(inc, dt), dt, 1, inc)


def rk3_jacobi_iteration(state: np.ndarray, disc: Discretization, config: SchemeConfig) -> Step:
    I = disc.interior
    U0 = disc.fill_ghosts(np.array(state, dtype=float))
    speeds = disc.speeds(U0)
    dt = pseudo_time_step(config.cfl, speeds, disc.grid)
    u0 = U0[I].copy()

    U1 = U0.copy()
    U1[I] = u0 + dt * spatial_operator(disc, U0, speeds)
    disc.fill_ghosts(U1)

    a, b = RK3_STAGE2
    U2 = U1.copy()
    U2[I] = a * u0 + b * U1[I] + b * dt * spatial_operator(disc, U1, speeds)
    disc.fill_ghosts(U2)

    a, b = RK3_STAGE3
    U3 = U2.copy()
    U3[I] = a * u0 + b * U2[I] + b * dt * spatial_operator(disc, U2, speeds)
    inc = U3[I] - u0
    return Step(U3, average_residue(inc, dt), dt, 3, inc)


def sweep_iteration(state: np.ndarray, disc: Discretization, config: SchemeConfig,
                    ordering=SweepOrdering.I_UP_J_UP, record: Optional[dict] = None) -> Step:
    """One Gauss-Seidel pass in the given ordering.

    Ghosts, wave speeds and the step are fixed at the start of the pass.  If
    ``record`` is a dict it receives the face fluxes each point used, keyed
    ``east``, ``west``, ``north``, ``south`` (interior-shaped arrays).
    """
    U = disc.fill_ghosts(np.array(state, dtype=float))
    speeds = disc.speeds(U)
    dt = pseudo_time_step(config.cfl, speeds, disc.grid)
    ip, fp = disc.params(speeds)
    inc = np.zeros_like(U[disc.interior])
    if record is not None:
        faces = [np.zeros_like(inc) for _ in range(4)]
    else:
        faces = [np.zeros((1, 1, 1)) for _ in range(4)]
    st = K.sweep(U, inc, int(SweepOrdering(ordering)), dt, ip, fp, disc.aux,
                 disc.wallx, disc.wally, record is not None, *faces)
    _check(st)
    if record is not None:
        record.update(zip(("east", "west", "north", "south"), faces))
    return Step(U, average_residue(inc, dt), dt, 1, inc)


# -- run loop -------------------------------------------------------------------


@dataclass
class Problem:
    """Everything a run needs besides the scheme."""

    disc: Discretization
    initial: np.ndarray
    tol: float = 1e-12
    errors: Optional[Callable[[np.ndarray], dict]] = None
    label: str = ""


class IterationRecord(NamedTuple):
    iterations: int
    resA: float
    dt: float
    time: float
    state: np.ndarray
    ordering: Optional[SweepOrdering]


def iterate(disc: Discretization, state: np.ndarray, config: SchemeConfig) -> Iterator[IterationRecord]:
    """Endless stream of iterations; raises DivergenceError on breakdown."""
    U = disc.fill_ghosts(np.array(state, dtype=float))
    count = 0
    time = 0.0
    ordering = SweepOrdering.I_UP_J_UP
    while True:
        with np.errstate(all="ignore"):
            if config.kind == "fe_jacobi":
                step, used = fe_jacobi_iteration(U, disc, config), None
            elif config.kind == "rk3_jacobi":
                step, used = rk3_jacobi_iteration(U, disc, config), None
            else:
                step, used = sweep_iteration(U, disc, config, ordering), ordering
                ordering = ordering.next()
        U = step.state
        count += step.iterations
        time += step.dt
        yield IterationRecord(count, step.resA, step.dt, time, U, used)


def run(problem: Problem, config: SchemeConfig, callback=None):
    """Iterate ``problem`` to steady state under ``config``.

    Returns ``(RunSummary, ResidueHistory, final_state)``.  ``callback`` is
    called with every :class:`IterationRecord`.
    """
    disc = problem.disc
    U0 = disc.fill_ghosts(np.array(problem.initial, dtype=float))
    guard = config.divergence_guard
    if guard is None:
        guard = 1e6 * max(float(np.max(np.abs(U0[disc.interior]))), 1.0)
    history = ResidueHistory()
    outcome = "not_convergent"
    state, res, time, count = U0, np.inf, 0.0, 0
    try:
        for rec in iterate(disc, U0, config):
            state, res, time, count = rec.state, rec.resA, rec.time, rec.iterations
            history.append(count, res, rec.dt, time)
            if callback is not None:
                callback(rec)
            inner = state[disc.interior]
            if not (np.isfinite(res) and np.all(np.isfinite(inner))) or np.max(np.abs(inner)) > guard:
                outcome = "diverged"
                break
            if res < config.tol:
                outcome = "converged"
                break
            if count >= config.max_iterations:
                break
    except DivergenceError:
        outcome = "diverged"
    errors = None
    if problem.errors is not None and outcome != "diverged":
        errors = problem.errors(state)
    summary = RunSummary(outcome, count, time, float(res), errors, config.kind, config.cfl)
    return summary, history, state


def solve_to_steady(case, config: SchemeConfig, **grid_options):
    """Build the case's problem (``case.problem(**grid_options)``) and run it."""
    problem = case if isinstance(case, Problem) else case.problem(**grid_options)
    return run(problem, config)
