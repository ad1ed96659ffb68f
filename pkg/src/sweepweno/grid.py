"""Uniform cell-centred grids with a three-point ghost frame.

State arrays live on the full storage lattice, shape ``(m, nx + 6, ny + 6)``
in 2D and ``(m, nx + 6, 1)`` in 1D.  Interior point ``i`` (1-based) sits at
storage index ``i + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GHOST = 3
MIN_POINTS = 7


class InvalidGridError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    dim: int
    nx: int
    ny: int
    dx: float
    dy: float
    bounds: tuple[float, float, float, float]
    ghost: int = GHOST

    @property
    def shape(self) -> tuple[int, int]:
        """Storage shape (without the component axis)."""
        g = self.ghost
        return (self.nx + 2 * g, self.ny + 2 * g if self.dim == 2 else 1)

    @property
    def npoints(self) -> int:
        return self.nx * (self.ny if self.dim == 2 else 1)

    @property
    def interior(self) -> tuple[slice, slice]:
        g = self.ghost
        if self.dim == 1:
            return (slice(g, g + self.nx), slice(0, 1))
        return (slice(g, g + self.nx), slice(g, g + self.ny))

    def x(self, i):
        """x coordinate of 1-based point index ``i`` (ghosts allowed)."""
        a = self.bounds[0]
        return a + (np.asarray(i, dtype=float) - 0.5) * self.dx

    def y(self, j):
        if self.dim == 1:
            return np.zeros_like(np.asarray(j, dtype=float))
        c = self.bounds[2]
        return c + (np.asarray(j, dtype=float) - 0.5) * self.dy

    @property
    def xs(self) -> np.ndarray:
        """x coordinates along the storage axis, ghosts included."""
        return self.x(np.arange(self.shape[0]) - self.ghost + 1)

    @property
    def ys(self) -> np.ndarray:
        if self.dim == 1:
            return np.zeros(1)
        return self.y(np.arange(self.shape[1]) - self.ghost + 1)

    def mesh(self, interior_only: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """Coordinate arrays ``(X, Y)`` shaped like the storage (or interior)."""
        X, Y = np.meshgrid(self.xs, self.ys, indexing="ij")
        if interior_only:
            return X[self.interior], Y[self.interior]
        return X, Y

    def empty_state(self, m: int) -> np.ndarray:
        return np.zeros((m, *self.shape))


def build_grid(bounds, nx: int, ny: int | None = None) -> Grid:
    """Build a 1D grid from ``(a, b)`` or a 2D grid from ``(a, b, c, d)``."""
    bounds = tuple(float(v) for v in bounds)
    if nx < MIN_POINTS:
        raise InvalidGridError(f"nx={nx} is smaller than one stencil ({MIN_POINTS})")
    if len(bounds) == 2 and ny is None:
        a, b = bounds
        if not b > a:
            raise InvalidGridError(f"degenerate interval [{a}, {b}]")
        return Grid(1, nx, 1, (b - a) / nx, 1.0, (a, b, 0.0, 0.0))
    if len(bounds) != 4 or ny is None:
        raise InvalidGridError("2D grids need four bounds and ny")
    a, b, c, d = bounds
    if not (b > a and d > c):
        raise InvalidGridError(f"degenerate rectangle {bounds}")
    if ny < MIN_POINTS:
        raise InvalidGridError(f"ny={ny} is smaller than one stencil ({MIN_POINTS})")
    return Grid(2, nx, ny, (b - a) / nx, (d - c) / ny, bounds)
