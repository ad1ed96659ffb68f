import numpy as np
import pytest

from sweepweno.grid import GHOST, InvalidGridError, build_grid


def test_1d_layout():
    g = build_grid((0.0, 1.0), 10)
    assert g.dim == 1
    assert g.shape == (16, 1)
    assert g.dx == pytest.approx(0.1)
    assert g.npoints == 10
    # point i (1-based) sits at storage index i + 2
    assert g.xs[1 + GHOST - 1] == pytest.approx(0.05)
    assert g.xs[10 + GHOST - 1] == pytest.approx(0.95)
    X, _ = g.mesh(interior_only=True)
    assert X.shape == (10, 1)
    np.testing.assert_allclose(X[:, 0], 0.05 + 0.1 * np.arange(10))


def test_2d_layout():
    g = build_grid((0.0, 4.0, 0.0, 1.0), 120, 30)
    assert g.shape == (126, 36)
    assert g.dx == pytest.approx(g.dy)
    X, Y = g.mesh()
    assert X.shape == Y.shape == g.shape
    assert Y[0, GHOST] == pytest.approx(g.dy / 2)
    # ghost coordinates continue the lattice
    assert g.xs[0] == pytest.approx(-2.5 * g.dx)


def test_empty_state_shape():
    g = build_grid((0.0, 1.0, 0.0, 2.0), 8, 16)
    assert g.empty_state(4).shape == (4, 14, 22)


@pytest.mark.parametrize("bounds,nx,ny", [
    ((0.0, 1.0), 6, None),
    ((1.0, 1.0), 10, None),
    ((0.0, 1.0, 0.0, 1.0), 10, 3),
    ((0.0, 1.0, 1.0, 0.0), 10, 10),
    ((0.0, 1.0, 0.0, 1.0), 10, None),
])
def test_invalid_grids(bounds, nx, ny):
    with pytest.raises(InvalidGridError):
        build_grid(bounds, nx, ny)
