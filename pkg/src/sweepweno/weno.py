"""Fifth-order multi-resolution WENO reconstruction of a face value.

Five consecutive point values are read as cell averages of an unknown
function on unit cells centred at ``xi = -2..2`` (``xi = (x - x_i)/dx``).
Three nested central stencils give polynomials of degree 0, 2 and 4, which
are rewritten hierarchically and blended with WENO-Z type weights.

All polynomials are stored as ascending coefficient arrays in ``xi``, so
nothing below depends on the mesh size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as P

from . import _kernels as K

# Rows map the 5 window values to ascending coefficients in xi, as integer
# numerators over a common denominator (so constant data cancels exactly).
# Derived by solving the cell-average moment systems exactly.
_Q3_NUM = np.array(
    [
        [9, -116, 2134, -116, 9],
        [200, -1360, 0, 1360, -200],
        [-120, 1440, -2640, 1440, -120],
        [-160, 320, 0, -320, 160],
        [80, -320, 480, -320, 80],
    ],
    dtype=float,
)
_Q3_DEN = 1920.0
_Q2_NUM = np.array(
    [
        [0, -1, 26, -1, 0],
        [0, -12, 0, 12, 0],
        [0, 12, -24, 12, 0],
    ],
    dtype=float,
)
_Q2_DEN = 24.0

# Gram matrix of sum_{a=1..4} int_{-1/2}^{1/2} (d^a p / dxi^a)^2 over the
# coefficients (d1, d2, d3, d4).
_BETA_GRAM = np.array(
    [
        [1, 0, Fraction(1, 4), 0],
        [0, Fraction(13, 3), 0, Fraction(21, 10)],
        [Fraction(1, 4), 0, Fraction(3129, 80), 0],
        [0, Fraction(21, 10), 0, Fraction(87617, 140)],
    ],
    dtype=float,
)


def _beta1_min_one_sided(values):
    v = np.asarray(values, dtype=float)
    return min((v[2] - v[1]) ** 2, (v[3] - v[2]) ** 2)


def _beta1_zero(values):
    return 0.0


def _beta1_central(values):
    v = np.asarray(values, dtype=float)
    return 0.25 * (v[3] - v[1]) ** 2


def _beta1_max_one_sided(values):
    v = np.asarray(values, dtype=float)
    return max((v[2] - v[1]) ** 2, (v[3] - v[2]) ** 2)


def _beta1_mean_one_sided(values):
    v = np.asarray(values, dtype=float)
    return 0.5 * ((v[2] - v[1]) ** 2 + (v[3] - v[2]) ** 2)


BETA1_STRATEGIES = {
    "min_one_sided": (_beta1_min_one_sided, K.BETA1_MIN_ONE_SIDED),
    "zero": (_beta1_zero, K.BETA1_ZERO),
    "central": (_beta1_central, K.BETA1_CENTRAL),
    "max_one_sided": (_beta1_max_one_sided, K.BETA1_MAX),
    "mean_one_sided": (_beta1_mean_one_sided, K.BETA1_MEAN),
}


@dataclass(frozen=True)
class ReconstructionConfig:
    gamma12: float = 1.0 / 11.0
    gamma22: float = 10.0 / 11.0
    gamma13: float = 1.0 / 111.0
    gamma23: float = 10.0 / 111.0
    gamma33: float = 100.0 / 111.0
    epsilon: float = 1e-6
    beta1_strategy: str = "max_one_sided"
    # polynomials whose derivatives feed beta2, beta3: "q" (candidates) or "p" (hierarchical)
    indicator_source: str = "q"
    # Lax-Friedrichs speed in characteristic space: each field's own maximum or one shared
    split_speeds: str = "per_field"

    def __post_init__(self):
        if abs(self.gamma12 + self.gamma22 - 1.0) > 1e-14:
            raise ValueError("gamma12 + gamma22 must equal 1")
        if abs(self.gamma13 + self.gamma23 + self.gamma33 - 1.0) > 1e-14:
            raise ValueError("gamma13 + gamma23 + gamma33 must equal 1")
        if self.gamma22 == 0.0 or self.gamma33 == 0.0:
            raise ValueError("gamma22 and gamma33 must be nonzero")
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive")
        if self.beta1_strategy not in BETA1_STRATEGIES:
            raise ValueError(f"unknown beta1 strategy {self.beta1_strategy!r}")
        if self.indicator_source not in ("q", "p"):
            raise ValueError(f"indicator_source must be 'q' or 'p', not {self.indicator_source!r}")
        if self.split_speeds not in ("per_field", "global"):
            raise ValueError(f"split_speeds must be 'per_field' or 'global', not {self.split_speeds!r}")

    @property
    def linear_weights(self) -> np.ndarray:
        return np.array([self.gamma13, self.gamma23, self.gamma33])

    @property
    def beta1_code(self) -> int:
        code = BETA1_STRATEGIES[self.beta1_strategy][1]
        return code | K.BETA_FROM_P if self.indicator_source == "p" else code

    def kernel_weights(self) -> list[float]:
        return [self.gamma12, self.gamma22, self.gamma13, self.gamma23, self.gamma33]


DEFAULT_CONFIG = ReconstructionConfig()


@dataclass
class ReconstructionWorkspace:
    qcoef: tuple[np.ndarray, np.ndarray, np.ndarray]
    pcoef: tuple[np.ndarray, np.ndarray, np.ndarray]
    beta: np.ndarray
    tau: float
    omega: np.ndarray


def _window(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.shape != (5,):
        raise ValueError(f"expected 5 values, got shape {v.shape}")
    return v


def candidate_polynomials(values, dx: float = 1.0):
    """Coefficients of q1 (degree 0), q2 (degree 2), q3 (degree 4) in xi.

    ``dx`` only fixes the unit; coefficients in the scaled variable are the
    same for every mesh.
    """
    v = _window(values)
    q1 = np.array([v[2]])
    q2 = (_Q2_NUM @ v) / _Q2_DEN
    q3 = (_Q3_NUM @ v) / _Q3_DEN
    return q1, q2, q3


def hierarchical_polynomials(qcoef, config: ReconstructionConfig = DEFAULT_CONFIG):
    """p1 = q1, p2 and p3 from the nested linear-weight identities."""
    q1, q2, q3 = qcoef
    p1 = q1
    p2 = P.polysub(q2 / config.gamma22, config.gamma12 / config.gamma22 * p1)
    p3 = q3 / config.gamma33
    p3 = P.polysub(p3, config.gamma13 / config.gamma33 * p1)
    p3 = P.polysub(p3, config.gamma23 / config.gamma33 * p2)
    return p1, p2, p3


def _beta_from_coef(p: np.ndarray) -> float:
    d = np.zeros(4)
    n = min(len(p) - 1, 4)
    d[:n] = p[1 : n + 1]
    return float(d @ _BETA_GRAM @ d)


def smoothness_indicators(qcoef, pcoef, values, config: ReconstructionConfig = DEFAULT_CONFIG):
    """(beta1, beta2, beta3); beta1 comes from the configured strategy.

    beta2 and beta3 measure q2, q3 or p2, p3 according to
    ``config.indicator_source``.
    """
    _, p2, p3 = pcoef if config.indicator_source == "p" else qcoef
    beta1 = BETA1_STRATEGIES[config.beta1_strategy][0](values)
    return np.array([beta1, _beta_from_coef(p2), _beta_from_coef(p3)])


def nonlinear_weights(beta, config: ReconstructionConfig = DEFAULT_CONFIG):
    beta = np.asarray(beta, dtype=float)
    tau = (0.5 * (abs(beta[2] - beta[0]) + abs(beta[2] - beta[1]))) ** 2
    wbar = config.linear_weights * (1.0 + tau / (config.epsilon + beta))
    return wbar / wbar.sum(), tau


def analyse(values, config: ReconstructionConfig = DEFAULT_CONFIG) -> ReconstructionWorkspace:
    v = _window(values)
    q = candidate_polynomials(v)
    p = hierarchical_polynomials(q, config)
    beta = smoothness_indicators(q, p, v, config)
    omega, tau = nonlinear_weights(beta, config)
    return ReconstructionWorkspace(q, p, beta, tau, omega)


def reconstruct_face_value(values, side: str = "left", config: ReconstructionConfig = DEFAULT_CONFIG) -> float:
    """Value at the right face of the centre cell (``side="left"``).

    ``side="right"`` is the mirror image used for the downwind flux part:
    ``right(v1..v5) == left(v5..v1)``.
    """
    v = _window(values)
    if side == "right":
        v = v[::-1].copy()
    elif side != "left":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    ws = analyse(v, config)
    return float(sum(w * P.polyval(0.5, p) for w, p in zip(ws.omega, ws.pcoef)))


def kernel_face_value(values, side: str = "left", config: ReconstructionConfig = DEFAULT_CONFIG) -> float:
    """Same as :func:`reconstruct_face_value` through the compiled kernel."""
    v = _window(values)
    if side == "right":
        v = v[::-1]
    fp = np.zeros(12)
    fp[4] = config.epsilon
    fp[7:12] = config.kernel_weights()
    return K.weno_left(v[0], v[1], v[2], v[3], v[4], fp, config.beta1_code)
