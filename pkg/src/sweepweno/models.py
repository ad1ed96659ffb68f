"""Equation systems for the benchmark cases.

Each :class:`Model` carries vectorised numpy evaluators (used for wave
speeds, diagnostics and tests) plus the integer codes that select the same
physics inside the compiled kernels.  States are component-first arrays,
``u[k, ...]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels as K

GAMMA_AIR = 1.4
GRAVITY = 9.812


class DivergenceError(ArithmeticError):
    """Raised when a state leaves the physically admissible set."""


@dataclass(frozen=True)
class ShockStates:
    left: np.ndarray
    right: np.ndarray
    left_primitive: tuple[float, float, float]
    right_primitive: tuple[float, float, float]


@dataclass
class Model:
    name: str
    kind: int
    m: int
    dim: int
    source_kind: int = K.SRC_NONE
    gamma_prime: float = GAMMA_AIR
    gravity: float = GRAVITY
    # aux(x, y) feeds the source term; see _kernels for its meaning per kind
    aux: Optional[Callable] = None
    exact: Optional[Callable] = None
    components: tuple[str, ...] = field(default_factory=tuple)

    # -- primitive variables -------------------------------------------------

    def pressure(self, u):
        gp = self.gamma_prime
        if self.kind == K.EULER1D:
            return (gp - 1.0) * (u[2] - 0.5 * u[1] ** 2 / u[0])
        if self.kind == K.EULER2D:
            return (gp - 1.0) * (u[3] - 0.5 * (u[1] ** 2 + u[2] ** 2) / u[0])
        raise TypeError(f"{self.name} has no pressure")

    def conserved(self, *prim):
        """Conserved state from primitives (rho, u[, v], p) or (h, u)."""
        gp = self.gamma_prime
        prim = [np.asarray(p, dtype=float) for p in prim]
        if self.kind == K.EULER1D:
            rho, vel, p = np.broadcast_arrays(*prim)
            return np.stack([rho, rho * vel, p / (gp - 1.0) + 0.5 * rho * vel**2])
        if self.kind == K.EULER2D:
            rho, vx, vy, p = np.broadcast_arrays(*prim)
            E = p / (gp - 1.0) + 0.5 * rho * (vx**2 + vy**2)
            return np.stack([rho, rho * vx, rho * vy, E])
        if self.kind == K.SHALLOW1D:
            h, vel = np.broadcast_arrays(*prim)
            return np.stack([h, h * vel])
        (v,) = prim
        return v[np.newaxis].copy()

    # -- fluxes and sources --------------------------------------------------

    def flux(self, u, direction: int = 0):
        u = np.asarray(u, dtype=float)
        k = self.kind
        if k == K.BURGERS1D:
            return 0.5 * u**2
        if k == K.BURGERS2D:
            return np.sqrt(0.5) * 0.5 * u**2
        if k == K.SHALLOW1D:
            h, q = u
            return np.stack([q, q**2 / h + 0.5 * self.gravity * h**2])
        p = self.pressure(u)
        if k == K.EULER1D:
            rho, mom, E = u
            vel = mom / rho
            return np.stack([mom, mom * vel + p, vel * (E + p)])
        rho, mx, my, E = u
        vx, vy = mx / rho, my / rho
        if direction == 0:
            return np.stack([mx, mx * vx + p, mx * vy, vx * (E + p)])
        return np.stack([my, my * vx, my * vy + p, vy * (E + p)])

    def source(self, u, x, y=0.0):
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        if self.source_kind == K.SRC_NONE:
            return out
        a = self.aux(x, y)
        if self.source_kind == K.SRC_SCALAR:
            out[0] = a
        elif self.source_kind == K.SRC_EULER_TRIG:
            for r, c in enumerate((0.4, 0.6, 0.6, 1.8)):
                out[r] = c * a
        elif self.source_kind == K.SRC_SHALLOW:
            out[1] = a * u[0]
        return out

    def admissible(self, u) -> np.ndarray:
        """Mask of states with positive density (height) and pressure."""
        u = np.asarray(u, dtype=float)
        ok = np.all(np.isfinite(u), axis=0)
        if self.kind == K.SHALLOW1D:
            return ok & (u[0] > 0.0)
        if self.kind in (K.EULER1D, K.EULER2D):
            with np.errstate(all="ignore"):
                return ok & (u[0] > 0.0) & (self.pressure(u) > 0.0)
        return ok

    def max_speed(self, u, direction: int = 0) -> float:
        """Largest |eigenvalue| of the flux Jacobian over all points of ``u``."""
        return float(self.field_speeds(u, direction).max())

    def field_speeds(self, u, direction: int = 0) -> np.ndarray:
        """Largest |eigenvalue| of each characteristic field over all points of ``u``.

        Fields are ordered as the eigenvectors: ascending eigenvalue.
        """
        u = np.asarray(u, dtype=float)
        if not np.all(np.isfinite(u)):
            raise DivergenceError("non-finite state")
        k = self.kind
        if k == K.BURGERS1D:
            return np.array([np.max(np.abs(u[0]))])
        if k == K.BURGERS2D:
            return np.array([np.sqrt(0.5) * np.max(np.abs(u[0]))])
        if k == K.SHALLOW1D:
            h = u[0]
            if np.any(h <= 0.0):
                raise DivergenceError("non-positive water height")
            vel = u[1] / h
            c = np.sqrt(self.gravity * h)
            return np.array([np.max(np.abs(vel - c)), np.max(np.abs(vel + c))])
        rho = u[0]
        p = self.pressure(u)
        if np.any(rho <= 0.0) or np.any(p <= 0.0):
            raise DivergenceError("non-positive density or pressure")
        c = np.sqrt(self.gamma_prime * p / rho)
        vn = u[1 + direction] / rho
        a = np.max(np.abs(vn))
        mid = [a] if k == K.EULER1D else [a, a]
        return np.array([np.max(np.abs(vn - c)), *mid, np.max(np.abs(vn + c))])

    def eigenvectors(self, ua, ub, direction: int = 0):
        """(L, R) at the arithmetic mean of two states, via the kernel."""
        Lm = np.eye(self.m)
        Rm = np.eye(self.m)
        if self.m == 1:
            return Lm, Rm
        st = K.eigensystem(
            self.kind, direction, np.asarray(ua, float), np.asarray(ub, float),
            self.gamma_prime, self.gravity, Lm, Rm,
        )
        if st != K.OK:
            raise DivergenceError("non-physical interface state")
        return Lm, Rm


# -- model catalogue ----------------------------------------------------------


def _bottom(x):
    return 5.0 * np.exp(-0.4 * (x - 5.0) ** 2)


def _bottom_dx(x):
    return -0.8 * (x - 5.0) * _bottom(x)


def _burgers1d() -> Model:
    return Model(
        "burgers1d_src", K.BURGERS1D, 1, 1, K.SRC_SCALAR,
        aux=lambda x, y: np.sin(x) * np.cos(x),
        exact=lambda x, y: np.sin(x)[np.newaxis],
        components=("u",),
    )


def _shallow_water1d(gravity: float = GRAVITY) -> Model:
    def exact(x, y):
        h = 10.0 - _bottom(x)
        return np.stack([h, np.zeros_like(h)])

    return Model(
        "shallow_water1d", K.SHALLOW1D, 2, 1, K.SRC_SHALLOW, gravity=gravity,
        aux=lambda x, y: -gravity * _bottom_dx(x),
        exact=exact,
        components=("h", "hu"),
    )


def _burgers2d() -> Model:
    s = np.sqrt(0.5)
    return Model(
        "burgers2d_src", K.BURGERS2D, 1, 2, K.SRC_SCALAR,
        aux=lambda x, y: np.sin((x + y) * s) * np.cos((x + y) * s),
        exact=lambda x, y: np.sin((x + y) * s)[np.newaxis],
        components=("u",),
    )


_EULER2D_COMPONENTS = ("rho", "rhou", "rhov", "E")


def _euler2d_src() -> Model:
    model = Model(
        "euler2d_src", K.EULER2D, 4, 2, K.SRC_EULER_TRIG,
        aux=lambda x, y: np.cos(x + y),
        components=_EULER2D_COMPONENTS,
    )

    def exact(x, y):
        s = 1.0 + 0.2 * np.sin(x + y)
        return model.conserved(s, 1.0, 1.0, s)

    model.exact = exact
    return model


def _euler2d_nosrc() -> Model:
    model = Model("euler2d_nosrc", K.EULER2D, 4, 2, components=_EULER2D_COMPONENTS)

    def exact(x, y):
        return model.conserved(1.0 + 0.2 * np.sin(x - y), 1.0, 1.0, 1.0)

    model.exact = exact
    return model


def _euler1d() -> Model:
    return Model("euler1d", K.EULER1D, 3, 1, components=("rho", "rhou", "E"))


def _euler2d() -> Model:
    return Model("euler2d", K.EULER2D, 4, 2, components=_EULER2D_COMPONENTS)


_FACTORIES = {
    "burgers1d_src": _burgers1d,
    "shallow_water1d": _shallow_water1d,
    "burgers2d_src": _burgers2d,
    "euler2d_src": _euler2d_src,
    "euler2d_nosrc": _euler2d_nosrc,
    "euler1d": _euler1d,
    "euler2d": _euler2d,
}

MODEL_IDS = tuple(_FACTORIES)


def model(model_id: str, **options) -> Model:
    try:
        factory = _FACTORIES[model_id]
    except KeyError:
        raise KeyError(f"unknown model {model_id!r}; expected one of {MODEL_IDS}") from None
    return factory(**options)


# -- shock relations ----------------------------------------------------------


def normal_shock_ratios(mach: float, gamma_prime: float = GAMMA_AIR):
    """Pressure and density ratios across a normal shock."""
    g = gamma_prime
    pr = (2.0 * g * mach**2 - (g - 1.0)) / (g + 1.0)
    k = (g + 1.0) / (g - 1.0)
    rr = (k * pr + 1.0) / (k + pr)
    return pr, rr


def rankine_hugoniot_states(mach: float, gamma_prime: float = GAMMA_AIR) -> ShockStates:
    """Upstream/downstream states of a stationary shock with unit inflow."""
    if not mach > 1.0:
        raise ValueError(f"shock needs a supersonic upstream Mach number, got {mach}")
    g = gamma_prime
    p_l, rho_l, u_l = 1.0 / (g * mach**2), 1.0, 1.0
    pr, rr = normal_shock_ratios(mach, g)
    p_r = p_l * pr
    rho_r = rho_l * rr
    u_r = np.sqrt(
        g * (2.0 + (g - 1.0) * mach**2) * p_r / ((2.0 * g * mach**2 + (1.0 - g)) * rho_r)
    )
    euler = _euler1d()
    euler.gamma_prime = g
    return ShockStates(
        euler.conserved(rho_l, u_l, p_l),
        euler.conserved(rho_r, u_r, p_r),
        (p_l, rho_l, u_l),
        (p_r, rho_r, float(u_r)),
    )


def oblique_shock_states(mach: float, angle_deg: float, gamma_prime: float = GAMMA_AIR):
    """Primitive (rho, u, v, p) on both sides of a stationary oblique shock.

    The upstream flow is ``(1, 0)`` with ``p = 1/(gamma' M^2)``; the shock line
    makes ``angle_deg`` with the +x axis.  The downstream state comes from the
    normal-shock relations applied to the velocity component normal to the
    shock, the tangential component is unchanged.
    """
    g = gamma_prime
    theta = np.radians(angle_deg)
    tangent = np.array([np.cos(theta), np.sin(theta)])
    normal = np.array([tangent[1], -tangent[0]])
    vel = np.array([1.0, 0.0])
    if vel @ normal < 0.0:
        normal = -normal
    un = vel @ normal
    ut = vel @ tangent
    p_l = 1.0 / (g * mach**2)
    mach_n = un * mach
    pr, rr = normal_shock_ratios(mach_n, g)
    un_r = un / rr
    vel_r = un_r * normal + ut * tangent
    return (1.0, 1.0, 0.0, p_l), (rr, vel_r[0], vel_r[1], p_l * pr)
