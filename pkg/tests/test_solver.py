import numpy as np
import pytest

from sweepweno.boundary import BoundarySet, Dirichlet, Inflow, Outflow, Periodic, Plate, SlipWall
from sweepweno.cases import case_spec
from sweepweno.grid import build_grid
from sweepweno.models import model
from sweepweno.solver import (
    RK3_STAGE2, RK3_STAGE3, Discretization, Problem, ResidueHistory, SchemeConfig, SweepOrdering,
    average_residue, fe_jacobi_iteration, pseudo_time_step, rk3_jacobi_iteration, run,
    spatial_operator, sweep_iteration,
)


def _burgers2d_disc(n=8):
    m = model("burgers2d_src")
    g = build_grid((0.0, 2.0, 0.0, 2.0), n, n)
    d = Dirichlet()
    disc = Discretization(m, g, BoundarySet(d, d, d, d))
    X, Y = g.mesh(interior_only=True)
    return disc, disc.new_state(1.3 * np.sin((X + Y) * np.sqrt(0.5))[None])


def _uniform_euler(bset, n=10):
    e = model("euler2d")
    g = build_grid((0.0, 2.0, -1.0, 1.0), n, n)
    disc = Discretization(e, g, bset)
    state = e.conserved(1.0, 2.0, 0.0, 1.0 / 1.4)
    return disc, disc.new_state(np.broadcast_to(state[:, None, None], (4, n, n)))


# -- configuration ------------------------------------------------------------


def test_scheme_names_normalised():
    assert SchemeConfig("fe-sweep", 1.0).kind == "fe_sweep"


@pytest.mark.parametrize("kwargs", [
    dict(kind="gauss", cfl=1.0), dict(kind="fe_jacobi", cfl=0.0),
    dict(kind="fe_jacobi", cfl=1.0, tol=-1.0), dict(kind="fe_jacobi", cfl=1.0, max_iterations=0),
])
def test_scheme_validation(kwargs):
    with pytest.raises(ValueError):
        SchemeConfig(**kwargs)


def test_sweep_ordering_cycle():
    o = SweepOrdering.I_UP_J_UP
    seen = []
    for _ in range(4):
        seen.append((o.i_ascending, o.j_ascending))
        o = o.next()
    assert o is SweepOrdering.I_UP_J_UP
    assert seen == [(True, True), (False, True), (False, False), (True, False)]


def test_pseudo_time_step_oracle(oracles):
    o = oracles["pseudo_time_step"]
    g = build_grid((0.0, 0.005 * 10), 10)
    from sweepweno.flux import WaveSpeeds
    assert pseudo_time_step(o["cfl"], WaveSpeeds(o["alpha"]), g) == pytest.approx(o["dt"], rel=1e-14)
    g2 = build_grid((0.0, 1.0, 0.0, 2.0), 10, 10)
    assert pseudo_time_step(1.0, WaveSpeeds(2.0, 4.0), g2) == pytest.approx(1.0 / (20.0 + 20.0))


def test_residue_formula():
    rng = np.random.default_rng(1)
    inc = rng.normal(size=(4, 6, 5))
    direct = sum(abs(x) for x in inc.ravel()) / inc.size / 0.01
    assert average_residue(inc, 0.01) == pytest.approx(direct, rel=1e-13)


def test_history_array():
    h = ResidueHistory()
    assert h.as_array().shape == (0, 4)
    h.append(3, 1e-3, 0.1, 0.1)
    assert h.as_array().tolist() == [[3, 1e-3, 0.1, 0.1]]


# -- operator ----------------------------------------------------------------


@pytest.mark.parametrize("bset", [
    BoundarySet(Outflow(), Outflow(), Outflow(), Outflow()),
    BoundarySet(Periodic(), Periodic(), Periodic(), Periodic()),
    BoundarySet(Outflow(), Outflow(), SlipWall(), SlipWall()),
    BoundarySet(Outflow(), Outflow(), Outflow(), Outflow(), plates=[Plate(0.0, (0.4, 1.2))]),
])
def test_freestream_preserved(bset):
    disc, U = _uniform_euler(bset)
    L = spatial_operator(disc, U, disc.speeds(U))
    assert np.max(np.abs(L)) < 1e-13


def test_point_operator_matches_field():
    disc, U = _burgers2d_disc()
    a = disc.speeds(U)
    L = spatial_operator(disc, U, a)
    for i, j in [(1, 1), (4, 5), (8, 8)]:
        np.testing.assert_allclose(spatial_operator(disc, U, a, at=(i, j)), L[:, i - 1, j - 1], rtol=1e-14)
    np.testing.assert_allclose(spatial_operator(disc, U, a, freshness="live"), L, rtol=1e-13, atol=1e-15)


def test_exact_solution_is_near_steady():
    # the discrete residual of the exact solution is a truncation error
    errs = []
    for n in (16, 32):
        m = model("burgers2d_src")
        g = build_grid((0.0, 2.0, 0.0, 2.0), n, n)
        d = Dirichlet()
        disc = Discretization(m, g, BoundarySet(d, d, d, d))
        X, Y = g.mesh(interior_only=True)
        U = disc.new_state(m.exact(X, Y))
        errs.append(np.max(np.abs(spatial_operator(disc, U, disc.speeds(U)))))
    assert errs[0] / errs[1] > 16.0


# -- drivers -----------------------------------------------------------------


@pytest.mark.parametrize("kind", ["fe_jacobi", "rk3_jacobi", "fe_sweep"])
def test_fixed_point_invariance(kind):
    disc, U = _uniform_euler(BoundarySet(Outflow(), Outflow(), Outflow(), Outflow()))
    cfg = SchemeConfig(kind, 0.5)
    step = {"fe_jacobi": fe_jacobi_iteration, "rk3_jacobi": rk3_jacobi_iteration,
            "fe_sweep": sweep_iteration}[kind](U, disc, cfg)
    np.testing.assert_allclose(step.state[disc.interior], U[disc.interior], rtol=0, atol=1e-14)
    assert step.resA < 1e-12


def test_fe_jacobi_step():
    disc, U = _burgers2d_disc()
    cfg = SchemeConfig("fe_jacobi", 0.3)
    a = disc.speeds(U)
    dt = pseudo_time_step(0.3, a, disc.grid)
    expected = U[disc.interior] + dt * spatial_operator(disc, U, a)
    step = fe_jacobi_iteration(U, disc, cfg)
    np.testing.assert_allclose(step.state[disc.interior], expected, rtol=1e-14)
    assert step.dt == dt
    assert step.iterations == 1


def test_rk3_step_composition():
    disc, U = _burgers2d_disc()
    cfg = SchemeConfig("rk3_jacobi", 0.8)
    I = disc.interior
    a = disc.speeds(U)
    dt = pseudo_time_step(0.8, a, disc.grid)
    u0 = U[I].copy()
    U1 = U.copy()
    U1[I] = u0 + dt * spatial_operator(disc, U, a)
    disc.fill_ghosts(U1)
    U2 = U1.copy()
    U2[I] = RK3_STAGE2[0] * u0 + RK3_STAGE2[1] * (U1[I] + dt * spatial_operator(disc, U1, a))
    disc.fill_ghosts(U2)
    u3 = RK3_STAGE3[0] * u0 + RK3_STAGE3[1] * (U2[I] + dt * spatial_operator(disc, U2, a))
    step = rk3_jacobi_iteration(U, disc, cfg)
    np.testing.assert_allclose(step.state[I], u3, rtol=1e-13)
    assert step.iterations == 3


def _python_sweep(disc, U, dt, a, ordering):
    """Gauss-Seidel by hand: each point updated from the current array."""
    U = U.copy()
    g = disc.grid
    irange = range(1, g.nx + 1) if ordering.i_ascending else range(g.nx, 0, -1)
    jrange = list(range(1, g.ny + 1) if ordering.j_ascending else range(g.ny, 0, -1))
    for j in jrange:
        for i in irange:
            s = (slice(None), i + 2, j + 2)
            U[s] = U[s] + dt * spatial_operator(disc, U, a, at=(i, j), freshness="live")
    return U


@pytest.mark.parametrize("ordering", list(SweepOrdering))
def test_sweep_matches_pointwise_gauss_seidel(ordering):
    disc, U = _burgers2d_disc()
    cfg = SchemeConfig("fe_sweep", 1.0)
    a = disc.speeds(U)
    dt = pseudo_time_step(1.0, a, disc.grid)
    ref = _python_sweep(disc, U, dt, a, ordering)
    step = sweep_iteration(U, disc, cfg, ordering)
    np.testing.assert_allclose(step.state[disc.interior], ref[disc.interior], rtol=1e-13, atol=1e-15)
    inc = ref[disc.interior] - U[disc.interior]
    assert step.resA == pytest.approx(np.mean(np.abs(inc)) / dt, rel=1e-12)


def test_orderings_differ():
    disc, U = _burgers2d_disc()
    cfg = SchemeConfig("fe_sweep", 1.0)
    a = sweep_iteration(U, disc, cfg, SweepOrdering.I_UP_J_UP).state
    b = sweep_iteration(U, disc, cfg, SweepOrdering.I_DOWN_J_DOWN).state
    assert np.max(np.abs(a - b)) > 1e-8


def test_sweep_records_faces():
    disc, U = _burgers2d_disc()
    rec = {}
    sweep_iteration(U, disc, SchemeConfig("fe_sweep", 1.0), record=rec)
    assert set(rec) == {"east", "west", "north", "south"}
    assert rec["east"].shape == (1, 8, 8)


# -- run loop ----------------------------------------------------------------


def test_run_converges_and_counts():
    case = case_spec(1)
    p = case.problem(nx=20)
    seen = []
    s, h, u = run(p, SchemeConfig("rk3_jacobi", 1.0, 1e-10), callback=lambda r: seen.append(r.iterations))
    assert s.outcome == "converged"
    assert h.resA[-1] < 1e-10
    assert s.iterations % 3 == 0
    assert seen == h.iteration
    assert s.final_time == pytest.approx(sum(h.dt))
    assert s.errors["L1"] < 1e-6


def test_run_stops_at_cap():
    p = case_spec(1).problem(nx=20)
    s, h, _ = run(p, SchemeConfig("fe_jacobi", 0.1, 1e-14, max_iterations=25))
    assert s.outcome == "not_convergent"
    assert s.iterations == 25 == len(h)


def test_run_detects_divergence():
    p = case_spec(1).problem(nx=20)
    s, _, _ = run(p, SchemeConfig("fe_jacobi", 50.0, 1e-12, max_iterations=2000))
    assert s.outcome == "diverged"
    assert s.errors is None


def test_run_divergence_on_inadmissible_state():
    e = model("euler1d")
    g = build_grid((0.0, 1.0), 20)
    left = e.conserved(1.0, 0.0, 1.0)
    disc = Discretization(e, g, BoundarySet(Inflow(left), Outflow()))
    X, _ = g.mesh(interior_only=True)
    rho = np.where(X < 0.5, 1.0, 1e-3)
    init = e.conserved(rho, np.where(X < 0.5, 0.0, 5.0), np.where(X < 0.5, 1.0, 1e-4))
    s, _, _ = run(Problem(disc, disc.new_state(init)), SchemeConfig("fe_sweep", 5.0, max_iterations=500))
    assert s.outcome == "diverged"


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        Discretization(model("euler1d"), build_grid((0.0, 1.0, 0.0, 1.0), 8, 8),
                       BoundarySet(Outflow(), Outflow(), Outflow(), Outflow()))


@pytest.mark.parametrize("cid", [6, 8, 9])
def test_threaded_jacobi_matches_serial(cid):
    from sweepweno import solver

    c = case_spec(cid)
    p = c.problem(nx=24 if c.dim == 1 else max(c.nx // 4, 8))
    disc, U = p.disc, p.initial
    a = disc.speeds(U)
    serial = spatial_operator(disc, U, a)
    try:
        solver.set_threads(4)
        threaded = spatial_operator(disc, U, a)
    finally:
        solver.set_threads(1)
    np.testing.assert_array_equal(threaded, serial)
