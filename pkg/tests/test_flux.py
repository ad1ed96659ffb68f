import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sweepweno.flux import ALPHA_FLOOR, lf_split, numerical_flux_line, project, recombine, wave_speeds
from sweepweno.grid import build_grid
from sweepweno.models import model

finite = st.floats(-1e3, 1e3, allow_nan=False)


@given(st.lists(finite, min_size=1, max_size=8), st.floats(0, 1e3))
def test_split_sum_identity(vals, alpha):
    u = np.array(vals)
    f = 0.5 * u**2
    s = lf_split(f, u, alpha)
    np.testing.assert_allclose(s.fplus + s.fminus, f, rtol=1e-14, atol=1e-9)


def test_split_monotone_parts():
    # d f+/du >= 0 and d f-/du <= 0 whenever alpha bounds |f'|
    u = np.linspace(-2, 2, 81)
    s = lf_split(0.5 * u**2, u, 2.0)
    assert np.all(np.diff(s.fplus) >= -1e-15)
    assert np.all(np.diff(s.fminus) <= 1e-15)


def test_wave_speed_floor():
    g = build_grid((0.0, 1.0), 10)
    U = g.empty_state(1)
    assert wave_speeds(model("burgers1d_src"), U, g).alpha_x == ALPHA_FLOOR


def test_wave_speeds_ignore_ghosts():
    g = build_grid((0.0, 1.0, 0.0, 1.0), 8, 8)
    U = g.empty_state(1)
    U[0] = 1.0
    U[0, 0, 0] = 100.0
    ws = wave_speeds(model("burgers2d_src"), U, g)
    assert ws.alpha_x == pytest.approx(np.sqrt(0.5))
    assert ws.alpha_y == pytest.approx(np.sqrt(0.5))


@pytest.mark.parametrize("mid,prim", [
    ("burgers1d_src", (0.7,)),
    ("shallow_water1d", (3.0, 0.4)),
    ("euler1d", (1.0, 0.5, 0.8)),
    ("euler2d", (1.0, 0.5, -0.3, 0.8)),
])
def test_constant_line_flux_is_physical_flux(mid, prim):
    m = model(mid)
    u = np.asarray(m.conserved(*prim), dtype=float).reshape(m.m)
    window = np.tile(u, (6, 1))
    for d in range(m.dim):
        expect = m.flux(u[:, None], d)[:, 0]
        got = numerical_flux_line(m, window, alpha=3.0, direction=d)
        np.testing.assert_allclose(got, expect, rtol=1e-13, atol=1e-14)


def test_mirror_consistency_of_line_flux():
    # reflecting x -> -x flips the velocity and the mass and energy fluxes
    m = model("euler1d")
    rng = np.random.default_rng(5)
    base = np.array([m.conserved(1 + 0.1 * rng.random(), 0.2 * rng.random(), 1 + 0.1 * rng.random()) for _ in range(6)])
    flipped = base[::-1].copy()
    flipped[:, 1] *= -1
    f = numerical_flux_line(m, base, alpha=3.0)
    g = numerical_flux_line(m, flipped, alpha=3.0)
    np.testing.assert_allclose(g * np.array([-1, 1, -1]), f, rtol=1e-12, atol=1e-14)


@given(st.lists(st.floats(-1, 1), min_size=4, max_size=4))
def test_characteristic_round_trip(v):
    m = model("euler2d")
    ua = m.conserved(1.0, 0.3, -0.2, 0.9)
    ub = m.conserved(1.1, 0.2, 0.1, 1.0)
    for d in (0, 1):
        c = project(m, ua, ub, np.array(v), d)
        np.testing.assert_allclose(recombine(m, ua, ub, c, d), v, atol=1e-12)


def test_per_field_speeds_reach_the_kernel():
    from sweepweno.flux import WaveSpeeds, kernel_params
    from sweepweno.weno import ReconstructionConfig

    m = model("euler2d")
    g = build_grid((0.0, 1.0, 0.0, 1.0), 8, 8)
    U = g.empty_state(4)
    U[(slice(None), *g.interior)] = m.conserved(1.0, 1.0, 1.0, 1.0)[:, None, None]
    ws = wave_speeds(m, U, g)
    assert len(ws.fields) == 8
    assert ws.alpha_x == max(ws.fields[:4])
    _, fp = kernel_params(m, g, ws)
    assert fp[12] == 1.0
    _, fp = kernel_params(m, g, ws, ReconstructionConfig(split_speeds="global"))
    assert fp[12] == 0.0
    # a bare speed pair (no per-field data) always splits with the shared speed
    _, fp = kernel_params(m, g, WaveSpeeds(2.0, 2.0))
    assert fp[12] == 0.0
