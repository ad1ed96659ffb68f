"""Lax-Friedrichs splitting and characteristic-wise numerical fluxes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .grid import Grid
from .models import DivergenceError, Model
from .weno import DEFAULT_CONFIG, ReconstructionConfig

ALPHA_FLOOR = 1e-8


@dataclass(frozen=True)
class WaveSpeeds:
    alpha_x: float
    alpha_y: float = 0.0
    fields: tuple = ()


@dataclass(frozen=True)
class SplitFluxPair:
    fplus: np.ndarray
    fminus: np.ndarray


def wave_speeds(model: Model, state: np.ndarray, grid: Grid) -> WaveSpeeds:
    """Maximum characteristic speed per direction over the interior.

    ``fields`` carries the per-field maxima, four slots per direction.
    """
    u = state[(slice(None), *grid.interior)]
    alphas, fields = [], []
    for d in range(grid.dim):
        per_field = np.zeros(4)
        per_field[:model.m] = np.maximum(model.field_speeds(u, d), ALPHA_FLOOR)
        alphas.append(per_field.max())
        fields.extend(per_field)
    return WaveSpeeds(alphas[0], alphas[1] if grid.dim == 2 else 0.0, tuple(fields))


def lf_split(f, u, alpha: float) -> SplitFluxPair:
    f = np.asarray(f, dtype=float)
    u = np.asarray(u, dtype=float)
    return SplitFluxPair(0.5 * (f + alpha * u), 0.5 * (f - alpha * u))


def kernel_params(model: Model, grid: Grid, speeds: WaveSpeeds,
                  config: ReconstructionConfig = DEFAULT_CONFIG, has_walls: bool = False):
    ip = np.array(
        [model.kind, model.m, grid.dim, config.beta1_code, model.source_kind, int(has_walls)],
        dtype=np.int64,
    )
    fp = np.zeros(21)
    fp[:7] = (
        grid.dx, grid.dy, speeds.alpha_x, speeds.alpha_y,
        config.epsilon, model.gamma_prime, model.gravity,
    )
    fp[7:12] = config.kernel_weights()
    if config.split_speeds == "per_field" and speeds.fields:
        fp[12] = 1.0
        fp[13:13 + len(speeds.fields)] = speeds.fields
    return ip, fp


def numerical_flux_line(model: Model, window, alpha: float, direction: int = 0,
                        config: ReconstructionConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Flux at the face between the 3rd and 4th of six states on a line.

    ``window`` has shape ``(6, m)`` (or ``(6,)`` for scalar models).
    """
    win = np.ascontiguousarray(np.asarray(window, dtype=float).reshape(6, model.m))
    m = model.m
    ip, fp = kernel_params(model, _LineGrid(model.dim), WaveSpeeds(alpha, alpha), config)
    scratch = [np.empty((6, m)) for _ in range(3)]
    Lm, Rm = np.zeros((m, m)), np.zeros((m, m))
    out = np.empty(m)
    st = K.line_flux(win, direction, alpha, ip, fp, *scratch, Lm, Rm, np.empty(m), out)
    if st != K.OK:
        raise DivergenceError("non-physical interface state")
    return out


@dataclass(frozen=True)
class _LineGrid:
    dim: int
    dx: float = 1.0
    dy: float = 1.0


def project(model: Model, ua, ub, vectors, direction: int = 0):
    """Characteristic coordinates of ``vectors`` (columns) at the mean state."""
    Lm, _ = model.eigenvectors(ua, ub, direction)
    return Lm @ np.asarray(vectors, dtype=float)


def recombine(model: Model, ua, ub, coords, direction: int = 0):
    _, Rm = model.eigenvectors(ua, ub, direction)
    return Rm @ np.asarray(coords, dtype=float)
