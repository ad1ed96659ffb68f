import math

import numpy as np
import pytest

from sweepweno.cases import (
    CASE_IDS, CASES, NoExactSolutionError, UnknownCaseError, accuracy_table, case_spec,
    convergence_order, error_norms,
)
from sweepweno.grid import build_grid
from sweepweno.models import model
from sweepweno.solver import SchemeConfig, spatial_operator


def test_thirteen_cases():
    assert CASE_IDS == tuple(range(1, 14))
    for bad in (0, 14, "x", None):
        with pytest.raises(UnknownCaseError):
            case_spec(bad)


@pytest.mark.parametrize("cid", CASE_IDS)
def test_every_case_builds_a_finite_problem(cid):
    c = case_spec(cid)
    # a quarter of the reference grid keeps the plates on grid lines
    nx = 12 if c.dim == 1 else max(c.nx // 4, 8)
    p = c.problem(nx=nx)
    U = p.initial
    assert U.shape[0] == p.disc.model.m
    assert np.all(np.isfinite(U))
    L = spatial_operator(p.disc, U, p.disc.speeds(U))
    assert np.all(np.isfinite(L))


def test_grid_labels():
    assert case_spec(8).grid_label() == "120x30"
    assert case_spec(6).grid_label() == "400"
    assert case_spec(12).grid_label() == "140x200"


def test_aspect_ratio_kept():
    g = case_spec(8).grid(60)
    assert (g.nx, g.ny) == (60, 15)
    assert g.dx == pytest.approx(g.dy)


def test_desk_presets():
    for cid in range(9, 14):
        c = case_spec(cid)
        p = c.problem(desk=True)
        assert p.disc.grid.nx == c.nx // 2 and p.disc.grid.ny == c.ny // 2
        assert p.tol == 1e-10
        assert p.disc.has_walls
    # no preset: the reference grid
    assert case_spec(8).problem(desk=True).disc.grid.nx == 120


def test_reference_rows():
    c = case_spec(1)
    (row,) = c.reference("fe-sweep", n=10)
    assert (row.l1, row.linf, row.iterations) == (6.27e-7, 1.54e-6, 130)
    thr = case_spec(6).reference("rk3_jacobi", cfl=1.3)
    assert thr[0].iterations is None
    assert case_spec(8).table_cfl == {"fe_jacobi": 0.1, "rk3_jacobi": 0.6, "fe_sweep": 0.6}


def test_printed_outlier_kept_verbatim():
    (row,) = case_spec(4).reference("fe_sweep", n=60)
    assert row.l1 == 6.08e-7


def test_error_norms_unweighted():
    g = build_grid((0.0, 1.0), 10)
    U = g.empty_state(1)
    X, _ = g.mesh(interior_only=True)
    U[(0, *g.interior)] = X + np.where(np.arange(10)[:, None] == 3, 0.5, 0.1)
    e = error_norms(U, lambda x, y: x[None], g)
    assert e["L1"] == pytest.approx((9 * 0.1 + 0.5) / 10)
    assert e["Linf"] == pytest.approx(0.5)
    with pytest.raises(NoExactSolutionError):
        error_norms(U, None, g)


def test_convergence_order():
    assert convergence_order(32.0, 1.0) == pytest.approx(5.0)
    assert convergence_order(9.0, 1.0, ratio=3.0) == pytest.approx(2.0)


def test_accuracy_table_small():
    rows = accuracy_table(case_spec(1), SchemeConfig("fe_sweep", 1.0), [10, 20])
    assert [r.n for r in rows] == [10, 20]
    assert rows[0].l1_order is None
    assert rows[1].l1_order > 4.0
    assert all(r.outcome == "converged" for r in rows)
    with pytest.raises(NoExactSolutionError):
        accuracy_table(case_spec(6), SchemeConfig("fe_sweep", 1.0), [10])


def test_shock_case_initial_states():
    p = case_spec(6).problem()
    e = model("euler1d")
    rho = p.initial[(0, *p.disc.grid.interior)][:, 0]
    assert rho[0] == 1.0
    assert rho[-1] == pytest.approx(8.0 / 3.0)
    # both sides are fixed states; the shock sits at x = 0
    X, _ = p.disc.grid.mesh(interior_only=True)
    assert np.all((rho > 1.5) == (X[:, 0] > 0))
    assert e.pressure(p.initial[:, 3:5, 0]).min() > 0


def test_shock_case_boundary_options():
    c = case_spec(6)
    for b in ("dirichlet", "periodic", "outflow"):
        c.problem(nx=20, boundary=b)
    with pytest.raises(ValueError):
        c.problem(nx=20, boundary="reflect")


def test_oblique_initial_shock_line():
    p = case_spec(7).problem(nx=40)
    g = p.disc.grid
    rho = p.initial[(0, *g.interior)]
    X, Y = g.mesh(interior_only=True)
    # the shock runs from (3, 0) up and to the left at 135 degrees
    assert np.all(rho[(X + Y) < 2.9] == 1.0)
    assert np.all(rho[(X + Y) > 3.1] > 1.0)


def test_plate_freestream():
    p = case_spec(9).problem(nx=40)
    e = p.disc.model
    u = p.initial[:, 3, 3]
    rho, vx, vy = u[0], u[1] / u[0], u[2] / u[0]
    assert rho == 1.0
    assert math.degrees(math.atan2(vy, vx)) == pytest.approx(10.0)
    c = math.sqrt(1.4 * e.pressure(u) / rho)
    assert math.hypot(vx, vy) / c == pytest.approx(3.0)


def test_every_case_has_reference_data():
    for c in CASES.values():
        assert c.accuracy or c.thresholds
        assert {"rk3_jacobi", "fe_sweep"} <= set(c.table_cfl) <= {"fe_jacobi", "rk3_jacobi", "fe_sweep"}
    # the 1d shock has no convergent FE Jacobi entry
    assert "fe_jacobi" not in case_spec(6).table_cfl
