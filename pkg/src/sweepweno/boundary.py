"""Ghost-point filling for the benchmark boundary conditions.

Sides fill in the order left, right, bottom, top.  The x sides write the
interior rows only; the y sides write whole columns, so corner ghosts end
up with the y-side rule.  No axis-aligned stencil reads a corner.

Embedded plates are not ghost data: they become wall masks consumed by the
stencil gather in the kernels, which mirrors cross-wall values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .grid import Grid


class BoundaryError(ValueError):
    pass


@dataclass(frozen=True)
class Periodic:
    pass


@dataclass(eq=False)
class Dirichlet:
    """Ghosts take ``provider(x, y)``; ``None`` means the case's exact solution."""

    provider: Optional[Callable] = None
    _cache: dict = field(default_factory=dict, repr=False)


@dataclass(eq=False)
class Inflow:
    """A fixed conserved state on every ghost point of the side."""

    state: np.ndarray


@dataclass(frozen=True)
class Outflow:
    """Polynomial extrapolation of each component from the interior.

    Where the extrapolated ghosts of a grid line are not admissible (negative
    density or pressure, say) that line falls back to copying the outermost
    interior state.
    """

    degree: int = 4


@dataclass(frozen=True)
class SlipWall:
    pass


@dataclass(frozen=True)
class Plate:
    """Infinitely thin slip wall on the line ``y = position`` (``axis="y"``)
    or ``x = position`` (``axis="x"``), spanning ``extent`` along the other axis."""

    position: float
    extent: tuple[float, float]
    axis: str = "y"


@dataclass
class BoundarySet:
    left: object
    right: object
    bottom: object = None
    top: object = None
    plates: tuple = ()

    def __post_init__(self):
        if isinstance(self.left, Periodic) != isinstance(self.right, Periodic):
            raise BoundaryError("periodic must be set on both left and right")
        if isinstance(self.bottom, Periodic) != isinstance(self.top, Periodic):
            raise BoundaryError("periodic must be set on both bottom and top")
        self.plates = tuple(self.plates)


# -- extrapolation -------------------------------------------------------------

_NODES = np.arange(1.0, 6.0)


def _lagrange_row(t: float, nodes=_NODES) -> np.ndarray:
    row = np.ones(len(nodes))
    for k, xk in enumerate(nodes):
        for l, xl in enumerate(nodes):
            if l != k:
                row[k] *= (t - xl) / (xk - xl)
    return row


# weights for ghost offsets 1, 2, 3 beyond the outermost node
_EXTRAP4 = np.array([_lagrange_row(5.0 + s) for s in (1, 2, 3)])


def extrapolate_degree4(values, offsets=(1, 2, 3)) -> np.ndarray:
    """Continue the quartic through 5 unit-spaced values past the last one.

    ``values[-1]`` is the outermost point; ``offsets`` are distances beyond
    it in units of the spacing.  Extra leading axes are carried along.
    """
    v = np.asarray(values, dtype=float)
    if v.shape[0] != 5:
        raise ValueError("need exactly 5 values")
    if tuple(offsets) == (1, 2, 3):
        W = _EXTRAP4
    else:
        W = np.array([_lagrange_row(5.0 + s) for s in offsets])
    return np.tensordot(W, v, axes=(1, 0))


def _extrapolate(inner: np.ndarray, degree: int) -> np.ndarray:
    """``inner``: 5 outermost points along axis 0 (last is outermost)."""
    if degree == 4:
        return extrapolate_degree4(inner)
    if degree == 0:
        return np.repeat(inner[-1:], 3, axis=0)
    nodes = _NODES[5 - degree - 1 :]
    W = np.array([_lagrange_row(5.0 + s, nodes) for s in (1, 2, 3)])
    return np.tensordot(W, inner[5 - degree - 1 :], axes=(1, 0))


# -- ghost filling --------------------------------------------------------------


def _dirichlet_values(cond: Dirichlet, grid: Grid, side: str, exact):
    key = (grid, side)
    if key not in cond._cache:
        provider = cond.provider if cond.provider is not None else exact
        if provider is None:
            raise BoundaryError("Dirichlet side without a provider or exact solution")
        X, Y = grid.mesh()
        g = grid.ghost
        nx, ny = grid.nx, grid.ny
        if side == "left":
            sl = (slice(0, g), _rows(grid))
        elif side == "right":
            sl = (slice(nx + g, nx + 2 * g), _rows(grid))
        elif side == "bottom":
            sl = (slice(None), slice(0, g))
        else:
            sl = (slice(None), slice(ny + g, ny + 2 * g))
        cond._cache[key] = np.asarray(provider(X[sl], Y[sl]), dtype=float)
    return cond._cache[key]


def _rows(grid: Grid) -> slice:
    if grid.dim == 1:
        return slice(0, 1)
    return slice(grid.ghost, grid.ghost + grid.ny)


def _safeguard(ext, outermost, admissible):
    """Replace inadmissible extrapolated lines by a copy of ``outermost``."""
    if admissible is None:
        return ext
    ok = np.all([admissible(layer) for layer in ext], axis=0)
    if ok.all():
        return ext
    return np.where(ok[None, None], ext, outermost[None])


def _fill_x(U, grid: Grid, cond, side: str, exact, normal: int, admissible=None):
    g = grid.ghost
    nx = grid.nx
    rows = _rows(grid)
    if side == "left":
        ghost = slice(0, g)
        mirror = [2 * g - 1 - k for k in range(g)]  # storage 5,4,3 for ghosts 0,1,2
        inner = slice(g + 4, g - 1, -1)  # 5 outermost, outermost last
        ghost_order = [g - 1 - k for k in range(g)]  # offsets 1,2,3 -> 2,1,0
        periodic_src = slice(nx, nx + g)
    else:
        ghost = slice(nx + g, nx + 2 * g)
        mirror = [2 * (nx + g) - 1 - k for k in range(nx + g, nx + 2 * g)]
        inner = slice(nx + g - 5, nx + g)
        ghost_order = [nx + g + k for k in range(g)]
        periodic_src = slice(g, 2 * g)

    if isinstance(cond, Periodic):
        U[:, ghost, rows] = U[:, periodic_src, rows]
    elif isinstance(cond, Dirichlet):
        U[:, ghost, rows] = _dirichlet_values(cond, grid, side, exact)
    elif isinstance(cond, Inflow):
        U[:, ghost, rows] = np.asarray(cond.state, dtype=float)[:, None, None]
    elif isinstance(cond, Outflow):
        src = np.moveaxis(U[:, inner, rows], 1, 0)
        ext = _safeguard(_extrapolate(src, cond.degree), src[-1], admissible)
        for k, s in enumerate(ghost_order):
            U[:, s, rows] = ext[k]
    elif isinstance(cond, SlipWall):
        src = U[:, mirror, rows].copy()
        if U.shape[0] > 1:
            src[normal] = -src[normal]
        U[:, ghost, rows] = src
    else:
        raise BoundaryError(f"unsupported condition {cond!r} on {side}")


def _fill_y(U, grid: Grid, cond, side: str, exact, normal: int, admissible=None):
    g = grid.ghost
    ny = grid.ny
    if side == "bottom":
        ghost = slice(0, g)
        mirror = [2 * g - 1 - k for k in range(g)]
        inner = slice(g + 4, g - 1, -1)
        ghost_order = [g - 1 - k for k in range(g)]
        periodic_src = slice(ny, ny + g)
    else:
        ghost = slice(ny + g, ny + 2 * g)
        mirror = [2 * (ny + g) - 1 - k for k in range(ny + g, ny + 2 * g)]
        inner = slice(ny + g - 5, ny + g)
        ghost_order = [ny + g + k for k in range(g)]
        periodic_src = slice(g, 2 * g)

    if isinstance(cond, Periodic):
        U[:, :, ghost] = U[:, :, periodic_src]
    elif isinstance(cond, Dirichlet):
        U[:, :, ghost] = _dirichlet_values(cond, grid, side, exact)
    elif isinstance(cond, Inflow):
        U[:, :, ghost] = np.asarray(cond.state, dtype=float)[:, None, None]
    elif isinstance(cond, Outflow):
        src = np.moveaxis(U[:, :, inner], 2, 0)
        ext = _safeguard(_extrapolate(src, cond.degree), src[-1], admissible)
        for k, s in enumerate(ghost_order):
            U[:, :, s] = ext[k]
    elif isinstance(cond, SlipWall):
        src = U[:, :, mirror].copy()
        if U.shape[0] > 1:
            src[normal] = -src[normal]
        U[:, :, ghost] = src
    else:
        raise BoundaryError(f"unsupported condition {cond!r} on {side}")


def apply_boundary(state: np.ndarray, grid: Grid, bset: BoundarySet, exact=None,
                   admissible=None) -> np.ndarray:
    """Fill every ghost layer of ``state`` in place and return it.

    ``admissible(u)`` maps states ``(m, ...)`` to a boolean mask; outflow
    sides use it to reject extrapolated ghosts.
    """
    _fill_x(state, grid, bset.left, "left", exact, 1, admissible)
    _fill_x(state, grid, bset.right, "right", exact, 1, admissible)
    if grid.dim == 2:
        if bset.bottom is None or bset.top is None:
            raise BoundaryError("2D grids need bottom and top conditions")
        _fill_y(state, grid, bset.bottom, "bottom", exact, 2, admissible)
        _fill_y(state, grid, bset.top, "top", exact, 2, admissible)
    return state


# -- embedded plates ---------------------------------------------------------------


def wall_masks(grid: Grid, plates) -> tuple[np.ndarray, np.ndarray]:
    """Masks flagging walls between storage cells.

    ``wallx[i, j]`` marks a wall between ``(i, j)`` and ``(i + 1, j)``;
    ``wally[i, j]`` one between ``(i, j)`` and ``(i, j + 1)``.
    """
    wallx = np.zeros(grid.shape, dtype=np.int8)
    wally = np.zeros(grid.shape, dtype=np.int8)
    g = grid.ghost
    for plate in plates:
        if grid.dim != 2:
            raise BoundaryError("plates need a 2D grid")
        if plate.axis == "y":
            lo, hi, h, n, along, coords = grid.bounds[2], grid.bounds[3], grid.dy, grid.ny, grid.bounds[:2], grid.x(np.arange(1, grid.nx + 1))
        elif plate.axis == "x":
            lo, hi, h, n, along, coords = grid.bounds[0], grid.bounds[1], grid.dx, grid.nx, grid.bounds[2:], grid.y(np.arange(1, grid.ny + 1))
        else:
            raise BoundaryError(f"plate axis must be 'x' or 'y', not {plate.axis!r}")
        k = (plate.position - lo) / h
        kr = int(round(k))
        if abs(k - kr) > 1e-8 or not (1 <= kr <= n - 1):
            raise BoundaryError(f"plate line {plate.position} is not an interior grid interface")
        a, b = plate.extent
        tol = 1e-9 * h
        if a > b or a < along[0] - tol or b > along[1] + tol:
            raise BoundaryError(f"plate extent {plate.extent} outside the domain")
        hit = np.nonzero((coords >= a - tol) & (coords <= b + tol))[0] + g
        if plate.axis == "y":
            wally[hit, kr + g - 1] = 1
        else:
            wallx[kr + g - 1, hit] = 1
    return wallx, wally
