"""Compiled per-point kernels shared by the Jacobi and sweeping drivers.

Everything here works on the storage lattice described in :mod:`grid`
(component-first, ghost frame of width 3).  Model behaviour is selected by
small integer codes so a single compiled kernel serves every case.

Integer parameter vector ``ip``::

    0 kind, 1 m, 2 dim, 3 beta1 strategy, 4 source kind, 5 has walls

Float parameter vector ``fp``::

    0 dx, 1 dy, 2 alpha_x, 3 alpha_y, 4 epsilon, 5 gamma', 6 gravity,
    7..11 linear weights (g12, g22, g13, g23, g33)
"""

import math

import numpy as np
from numba import njit, prange

BURGERS1D = 0
BURGERS2D = 1
SHALLOW1D = 2
EULER1D = 3
EULER2D = 4

SRC_NONE = 0
SRC_SCALAR = 1  # R = aux
SRC_EULER_TRIG = 2  # R = (0.4, 0.6, 0.6, 1.8) * aux
SRC_SHALLOW = 3  # R = (0, aux * h)

BETA1_MIN_ONE_SIDED = 0
BETA1_ZERO = 1
BETA1_CENTRAL = 2
BETA1_MAX = 3
BETA1_MEAN = 4
BETA1_MASK = 7
# flag bit: indicators of p2, p3 (hierarchical) instead of q2, q3 (candidates)
BETA_FROM_P = 8

OK = 0
NONPHYSICAL = 1

SQRT_HALF = math.sqrt(0.5)


@njit(cache=True)
def weno_left(v0, v1, v2, v3, v4, fp, b1mode):
    """Multi-resolution WENO value at x_{i+1/2} from cells i-2..i+2."""
    eps = fp[4]
    G12 = fp[7]
    G22 = fp[8]
    G13 = fp[9]
    G23 = fp[10]
    G33 = fp[11]
    # q2, centred quadratic in xi = (x - x_i)/dx
    a2 = 0.5 * (v1 - 2.0 * v2 + v3)
    a1 = 0.5 * (v3 - v1)
    a0 = v2 - a2 / 12.0
    # q3, centred quartic
    b0 = (9.0 * v0 - 116.0 * v1 + 2134.0 * v2 - 116.0 * v3 + 9.0 * v4) / 1920.0
    b1 = (5.0 * v0 - 34.0 * v1 + 34.0 * v3 - 5.0 * v4) / 48.0
    b2 = -(v0 - 12.0 * v1 + 22.0 * v2 - 12.0 * v3 + v4) / 16.0
    b3 = -(v0 - 2.0 * v1 + 2.0 * v3 - v4) / 12.0
    b4 = (v0 - 4.0 * v1 + 6.0 * v2 - 4.0 * v3 + v4) / 24.0

    c0 = (a0 - G12 * v2) / G22
    c1 = a1 / G22
    c2 = a2 / G22
    d0 = (b0 - G13 * v2 - G23 * c0) / G33
    d1 = (b1 - G23 * c1) / G33
    d2 = (b2 - G23 * c2) / G33
    d3 = b3 / G33
    d4 = b4 / G33

    if b1mode & BETA_FROM_P:
        beta2 = c1 * c1 + (13.0 / 3.0) * c2 * c2
        e1, e2, e3, e4 = d1, d2, d3, d4
    else:
        beta2 = a1 * a1 + (13.0 / 3.0) * a2 * a2
        e1, e2, e3, e4 = b1, b2, b3, b4
    beta3 = (
        e1 * e1
        + 0.5 * e1 * e3
        + (13.0 / 3.0) * e2 * e2
        + 4.2 * e2 * e4
        + (3129.0 / 80.0) * e3 * e3
        + (87617.0 / 140.0) * e4 * e4
    )
    dl = v2 - v1
    dr = v3 - v2
    mode = b1mode & BETA1_MASK
    if mode == BETA1_ZERO:
        beta1 = 0.0
    elif mode == BETA1_CENTRAL:
        beta1 = 0.25 * (v3 - v1) * (v3 - v1)
    elif mode == BETA1_MAX:
        beta1 = max(dl * dl, dr * dr)
    elif mode == BETA1_MEAN:
        beta1 = 0.5 * (dl * dl + dr * dr)
    else:
        beta1 = min(dl * dl, dr * dr)

    t = 0.5 * (abs(beta3 - beta1) + abs(beta3 - beta2))
    tau = t * t
    w1 = G13 * (1.0 + tau / (eps + beta1))
    w2 = G23 * (1.0 + tau / (eps + beta2))
    w3 = G33 * (1.0 + tau / (eps + beta3))
    s = w1 + w2 + w3
    w1 /= s
    w2 /= s
    w3 /= s

    p1 = v2
    p2 = c0 + 0.5 * c1 + 0.25 * c2
    p3 = d0 + 0.5 * d1 + 0.25 * d2 + 0.125 * d3 + 0.0625 * d4
    return w1 * p1 + w2 * p2 + w3 * p3


@njit(cache=True)
def phys_flux(kind, d, u, gp, grav, out):
    if kind == BURGERS1D:
        out[0] = 0.5 * u[0] * u[0]
    elif kind == BURGERS2D:
        out[0] = SQRT_HALF * 0.5 * u[0] * u[0]
    elif kind == SHALLOW1D:
        h = u[0]
        q = u[1]
        out[0] = q
        out[1] = q * q / h + 0.5 * grav * h * h
    elif kind == EULER1D:
        rho = u[0]
        vel = u[1] / rho
        p = (gp - 1.0) * (u[2] - 0.5 * rho * vel * vel)
        out[0] = u[1]
        out[1] = u[1] * vel + p
        out[2] = vel * (u[2] + p)
    else:
        rho = u[0]
        vx = u[1] / rho
        vy = u[2] / rho
        p = (gp - 1.0) * (u[3] - 0.5 * rho * (vx * vx + vy * vy))
        if d == 0:
            out[0] = u[1]
            out[1] = u[1] * vx + p
            out[2] = u[1] * vy
            out[3] = vx * (u[3] + p)
        else:
            out[0] = u[2]
            out[1] = u[2] * vx
            out[2] = u[2] * vy + p
            out[3] = vy * (u[3] + p)


@njit(cache=True)
def eigensystem(kind, d, ua, ub, gp, grav, Lm, Rm):
    """Left/right eigenvectors at the arithmetic mean of ``ua`` and ``ub``."""
    if kind == SHALLOW1D:
        h = 0.5 * (ua[0] + ub[0])
        if not h > 0.0:
            return NONPHYSICAL
        vel = 0.5 * (ua[1] + ub[1]) / h
        c = math.sqrt(grav * h)
        Rm[0, 0] = 1.0
        Rm[0, 1] = 1.0
        Rm[1, 0] = vel - c
        Rm[1, 1] = vel + c
        s = 0.5 / c
        Lm[0, 0] = (vel + c) * s
        Lm[0, 1] = -s
        Lm[1, 0] = -(vel - c) * s
        Lm[1, 1] = s
        return OK

    if kind == EULER1D:
        rho = 0.5 * (ua[0] + ub[0])
        mom = 0.5 * (ua[1] + ub[1])
        E = 0.5 * (ua[2] + ub[2])
        if not rho > 0.0:
            return NONPHYSICAL
        vel = mom / rho
        q2 = vel * vel
        p = (gp - 1.0) * (E - 0.5 * rho * q2)
        if not p > 0.0:
            return NONPHYSICAL
        c = math.sqrt(gp * p / rho)
        H = (E + p) / rho
        b1 = (gp - 1.0) / (c * c)
        b2 = 0.5 * q2 * b1
        Rm[0, 0] = 1.0
        Rm[0, 1] = 1.0
        Rm[0, 2] = 1.0
        Rm[1, 0] = vel - c
        Rm[1, 1] = vel
        Rm[1, 2] = vel + c
        Rm[2, 0] = H - vel * c
        Rm[2, 1] = 0.5 * q2
        Rm[2, 2] = H + vel * c
        Lm[0, 0] = 0.5 * (b2 + vel / c)
        Lm[0, 1] = -0.5 * (b1 * vel + 1.0 / c)
        Lm[0, 2] = 0.5 * b1
        Lm[1, 0] = 1.0 - b2
        Lm[1, 1] = b1 * vel
        Lm[1, 2] = -b1
        Lm[2, 0] = 0.5 * (b2 - vel / c)
        Lm[2, 1] = -0.5 * (b1 * vel - 1.0 / c)
        Lm[2, 2] = 0.5 * b1
        return OK

    # 2D Euler, fields ordered (un - c, un, shear, un + c)
    rho = 0.5 * (ua[0] + ub[0])
    if not rho > 0.0:
        return NONPHYSICAL
    vx = 0.5 * (ua[1] + ub[1]) / rho
    vy = 0.5 * (ua[2] + ub[2]) / rho
    E = 0.5 * (ua[3] + ub[3])
    q2 = vx * vx + vy * vy
    p = (gp - 1.0) * (E - 0.5 * rho * q2)
    if not p > 0.0:
        return NONPHYSICAL
    c = math.sqrt(gp * p / rho)
    H = (E + p) / rho
    b1 = (gp - 1.0) / (c * c)
    b2 = 0.5 * q2 * b1
    if d == 0:
        ni, ti, un, ut = 1, 2, vx, vy
    else:
        ni, ti, un, ut = 2, 1, vy, vx

    Rm[0, 0] = 1.0
    Rm[ni, 0] = un - c
    Rm[ti, 0] = ut
    Rm[3, 0] = H - un * c
    Rm[0, 1] = 1.0
    Rm[ni, 1] = un
    Rm[ti, 1] = ut
    Rm[3, 1] = 0.5 * q2
    Rm[0, 2] = 0.0
    Rm[ni, 2] = 0.0
    Rm[ti, 2] = 1.0
    Rm[3, 2] = ut
    Rm[0, 3] = 1.0
    Rm[ni, 3] = un + c
    Rm[ti, 3] = ut
    Rm[3, 3] = H + un * c

    Lm[0, 0] = 0.5 * (b2 + un / c)
    Lm[0, ni] = -0.5 * (b1 * un + 1.0 / c)
    Lm[0, ti] = -0.5 * b1 * ut
    Lm[0, 3] = 0.5 * b1
    Lm[1, 0] = 1.0 - b2
    Lm[1, ni] = b1 * un
    Lm[1, ti] = b1 * ut
    Lm[1, 3] = -b1
    Lm[2, 0] = -ut
    Lm[2, ni] = 0.0
    Lm[2, ti] = 1.0
    Lm[2, 3] = 0.0
    Lm[3, 0] = 0.5 * (b2 - un / c)
    Lm[3, ni] = -0.5 * (b1 * un - 1.0 / c)
    Lm[3, ti] = -0.5 * b1 * ut
    Lm[3, 3] = 0.5 * b1
    return OK


@njit(cache=True)
def line_flux(win, d, alpha, ip, fp, fl, wc, fc, Lm, Rm, hc, out):
    """Numerical flux at the face between window rows 2 and 3.

    ``win`` holds 6 consecutive states (rows) along one grid line.
    """
    kind = ip[0]
    m = ip[1]
    b1mode = ip[3]
    gp = fp[5]
    grav = fp[6]
    for k in range(6):
        phys_flux(kind, d, win[k], gp, grav, fl[k])

    if m == 1:
        for k in range(6):
            wc[k, 0] = 0.5 * (fl[k, 0] + alpha * win[k, 0])
            fc[k, 0] = 0.5 * (fl[k, 0] - alpha * win[k, 0])
        out[0] = weno_left(
            wc[0, 0], wc[1, 0], wc[2, 0], wc[3, 0], wc[4, 0], fp, b1mode
        ) + weno_left(fc[5, 0], fc[4, 0], fc[3, 0], fc[2, 0], fc[1, 0], fp, b1mode)
        return OK

    status = eigensystem(kind, d, win[2], win[3], gp, grav, Lm, Rm)
    if status != OK:
        return status
    # splitting speed per field: one shared alpha, or each field's own maximum
    for s in range(m):
        hc[s] = fp[13 + 4 * d + s] if fp[12] != 0.0 else alpha
    for k in range(6):
        for s in range(m):
            acc_u = 0.0
            acc_f = 0.0
            for r in range(m):
                acc_u += Lm[s, r] * win[k, r]
                acc_f += Lm[s, r] * fl[k, r]
            # split in characteristic space: wc <- f+, fc <- f-
            wc[k, s] = 0.5 * (acc_f + hc[s] * acc_u)
            fc[k, s] = 0.5 * (acc_f - hc[s] * acc_u)
    for s in range(m):
        hc[s] = weno_left(
            wc[0, s], wc[1, s], wc[2, s], wc[3, s], wc[4, s], fp, b1mode
        ) + weno_left(fc[5, s], fc[4, s], fc[3, s], fc[2, s], fc[1, s], fp, b1mode)
    for r in range(m):
        acc = 0.0
        for s in range(m):
            acc += Rm[r, s] * hc[s]
        out[r] = acc
    return OK


@njit(cache=True)
def gather_x(U, fi, j, owner, m, has_walls, wallx, win):
    """Window for face fi+1/2 on row j as seen from cell ``owner``."""
    for k in range(6):
        t = fi - 2 + k
        src = t
        flip = False
        if has_walls:
            if t > owner:
                for w in range(owner, t):
                    if wallx[w, j]:
                        src = 2 * w + 1 - t
                        flip = True
                        break
            elif t < owner:
                for w in range(owner - 1, t - 1, -1):
                    if wallx[w, j]:
                        src = 2 * w + 1 - t
                        flip = True
                        break
        for r in range(m):
            win[k, r] = U[r, src, j]
        if flip:
            win[k, 1] = -win[k, 1]


@njit(cache=True)
def gather_y(U, i, fj, owner, m, has_walls, wally, win):
    for k in range(6):
        t = fj - 2 + k
        src = t
        flip = False
        if has_walls:
            if t > owner:
                for w in range(owner, t):
                    if wally[i, w]:
                        src = 2 * w + 1 - t
                        flip = True
                        break
            elif t < owner:
                for w in range(owner - 1, t - 1, -1):
                    if wally[i, w]:
                        src = 2 * w + 1 - t
                        flip = True
                        break
        for r in range(m):
            win[k, r] = U[r, i, src]
        if flip:
            win[k, 2] = -win[k, 2]


@njit(cache=True)
def add_source(src_kind, u_h, auxv, out):
    if src_kind == SRC_SCALAR:
        out[0] += auxv
    elif src_kind == SRC_EULER_TRIG:
        out[0] += 0.4 * auxv
        out[1] += 0.6 * auxv
        out[2] += 0.6 * auxv
        out[3] += 1.8 * auxv
    elif src_kind == SRC_SHALLOW:
        out[1] += auxv * u_h


@njit(cache=True)
def _scratch(m):
    return (
        np.empty((6, m)),
        np.empty((6, m)),
        np.empty((6, m)),
        np.empty((6, m)),
        np.zeros((m, m)),
        np.zeros((m, m)),
        np.empty(m),
        np.empty(m),
        np.empty(m),
        np.zeros((4, m)),
    )


@njit(cache=True)
def point_operator(U, i, j, ip, fp, aux, wallx, wally, ws, out):
    """Spatial operator L at storage point (i, j) from whatever U holds now.

    The four face fluxes used are left in ``ws[9]`` as (east, west, north,
    south).
    """
    win, fl, wc, fc, Lm, Rm, hc, fa, fb, faces = ws
    m = ip[1]
    dim = ip[2]
    has_walls = ip[5] != 0
    dx = fp[0]
    dy = fp[1]

    gather_x(U, i, j, i, m, has_walls, wallx, win)
    st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
    if st != OK:
        return st
    gather_x(U, i - 1, j, i, m, has_walls, wallx, win)
    st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
    if st != OK:
        return st
    for r in range(m):
        out[r] = -(fa[r] - fb[r]) / dx
        faces[0, r] = fa[r]
        faces[1, r] = fb[r]

    if dim == 2:
        gather_y(U, i, j, j, m, has_walls, wally, win)
        st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
        if st != OK:
            return st
        gather_y(U, i, j - 1, j, m, has_walls, wally, win)
        st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
        if st != OK:
            return st
        for r in range(m):
            out[r] -= (fa[r] - fb[r]) / dy
            faces[2, r] = fa[r]
            faces[3, r] = fb[r]

    add_source(ip[4], U[0, i, j], aux[i, j], out)
    return OK


@njit(cache=True)
def jacobi_operator(U, rhs, ip, fp, aux, wallx, wally):
    """L on every interior point from one frozen snapshot.

    Each face flux is computed once; faces on an embedded wall are computed
    from both sides.  ``rhs`` has the interior shape ``(m, nx, ny)``.
    """
    m = ip[1]
    dim = ip[2]
    has_walls = ip[5] != 0
    g = 3
    nx = U.shape[1] - 2 * g
    if dim == 2:
        ny = U.shape[2] - 2 * g
        j0 = g
    else:
        ny = 1
        j0 = 0
    dx = fp[0]
    dy = fp[1]
    win, fl, wc, fc, Lm, Rm, hc, fa, fb, _ = _scratch(m)

    Fx = np.empty((m, nx + 1, ny))
    for jj in range(ny):
        j = j0 + jj
        for f in range(nx + 1):
            fi = g - 1 + f
            gather_x(U, fi, j, fi, m, has_walls, wallx, win)
            st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
            if st != OK:
                return st
            for r in range(m):
                Fx[r, f, jj] = fa[r]
    if dim == 2:
        Fy = np.empty((m, nx, ny + 1))
        for ii in range(nx):
            i = g + ii
            for f in range(ny + 1):
                fj = g - 1 + f
                gather_y(U, i, fj, fj, m, has_walls, wally, win)
                st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
                if st != OK:
                    return st
                for r in range(m):
                    Fy[r, ii, f] = fa[r]

    for ii in range(nx):
        i = g + ii
        for jj in range(ny):
            j = j0 + jj
            if has_walls and wallx[i - 1, j]:
                gather_x(U, i - 1, j, i, m, has_walls, wallx, win)
                st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
                if st != OK:
                    return st
                for r in range(m):
                    rhs[r, ii, jj] = -(Fx[r, ii + 1, jj] - fb[r]) / dx
            else:
                for r in range(m):
                    rhs[r, ii, jj] = -(Fx[r, ii + 1, jj] - Fx[r, ii, jj]) / dx
            if dim == 2:
                if has_walls and wally[i, j - 1]:
                    gather_y(U, i, j - 1, j, m, has_walls, wally, win)
                    st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
                    if st != OK:
                        return st
                    for r in range(m):
                        rhs[r, ii, jj] -= (Fy[r, ii, jj + 1] - fb[r]) / dy
                else:
                    for r in range(m):
                        rhs[r, ii, jj] -= (Fy[r, ii, jj + 1] - Fy[r, ii, jj]) / dy
            for r in range(m):
                fa[r] = rhs[r, ii, jj]
            add_source(ip[4], U[0, i, j], aux[i, j], fa)
            for r in range(m):
                rhs[r, ii, jj] = fa[r]
    return OK


@njit(cache=True, parallel=True)
def jacobi_operator_parallel(U, rhs, ip, fp, aux, wallx, wally):
    """Threaded :func:`jacobi_operator`: same faces, same arithmetic per point.

    Face lines and points are independent, so the result does not depend on
    the thread count.
    """
    m = ip[1]
    dim = ip[2]
    has_walls = ip[5] != 0
    g = 3
    nx = U.shape[1] - 2 * g
    if dim == 2:
        ny = U.shape[2] - 2 * g
        j0 = g
    else:
        ny = 1
        j0 = 0
    dx = fp[0]
    dy = fp[1]
    status = np.zeros(max(nx, ny), dtype=np.int64)

    Fx = np.empty((m, nx + 1, ny))
    for jj in prange(ny):
        win, fl, wc, fc, Lm, Rm, hc, fa, fb, _ = _scratch(m)
        j = j0 + jj
        for f in range(nx + 1):
            fi = g - 1 + f
            gather_x(U, fi, j, fi, m, has_walls, wallx, win)
            st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
            if st != OK:
                status[jj] = st
            for r in range(m):
                Fx[r, f, jj] = fa[r]
    Fy = np.empty((m, nx, ny + 1))
    if dim == 2:
        for ii in prange(nx):
            win, fl, wc, fc, Lm, Rm, hc, fa, fb, _ = _scratch(m)
            i = g + ii
            for f in range(ny + 1):
                fj = g - 1 + f
                gather_y(U, i, fj, fj, m, has_walls, wally, win)
                st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fa)
                if st != OK:
                    status[ii] = st
                for r in range(m):
                    Fy[r, ii, f] = fa[r]

    for ii in prange(nx):
        win, fl, wc, fc, Lm, Rm, hc, fa, fb, _ = _scratch(m)
        i = g + ii
        for jj in range(ny):
            j = j0 + jj
            if has_walls and wallx[i - 1, j]:
                gather_x(U, i - 1, j, i, m, has_walls, wallx, win)
                st = line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
                if st != OK:
                    status[ii] = st
                for r in range(m):
                    rhs[r, ii, jj] = -(Fx[r, ii + 1, jj] - fb[r]) / dx
            else:
                for r in range(m):
                    rhs[r, ii, jj] = -(Fx[r, ii + 1, jj] - Fx[r, ii, jj]) / dx
            if dim == 2:
                if has_walls and wally[i, j - 1]:
                    gather_y(U, i, j - 1, j, m, has_walls, wally, win)
                    st = line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, fb)
                    if st != OK:
                        status[ii] = st
                    for r in range(m):
                        rhs[r, ii, jj] -= (Fy[r, ii, jj + 1] - fb[r]) / dy
                else:
                    for r in range(m):
                        rhs[r, ii, jj] -= (Fy[r, ii, jj + 1] - Fy[r, ii, jj]) / dy
            for r in range(m):
                fa[r] = rhs[r, ii, jj]
            add_source(ip[4], U[0, i, j], aux[i, j], fa)
            for r in range(m):
                rhs[r, ii, jj] = fa[r]
    for k in range(status.shape[0]):
        if status[k] != OK:
            return status[k]
    return OK


@njit(cache=True)
def sweep(U, incr, order, dt, ip, fp, aux, wallx, wally, record, fx_east, fx_west, fy_north, fy_south):
    """One Gauss-Seidel pass in place; ``incr`` receives per-point increments.

    With ``record`` set, the face fluxes each point used are stored per cell
    in the ``f*`` arrays (interior shape ``(m, nx, ny)``).
    """
    m = ip[1]
    dim = ip[2]
    g = 3
    nx = U.shape[1] - 2 * g
    ws = _scratch(m)
    L = np.empty(m)
    if order == 1 or order == 4:
        i_start, i_stop, i_step = g, g + nx, 1
    else:
        i_start, i_stop, i_step = g + nx - 1, g - 1, -1
    if dim == 2:
        ny = U.shape[2] - 2 * g
        if order == 1 or order == 2:
            j_start, j_stop, j_step = g, g + ny, 1
        else:
            j_start, j_stop, j_step = g + ny - 1, g - 1, -1
        j0 = g
    else:
        j_start, j_stop, j_step = 0, 1, 1
        j0 = 0
    for j in range(j_start, j_stop, j_step):
        for i in range(i_start, i_stop, i_step):
            st = point_operator(U, i, j, ip, fp, aux, wallx, wally, ws, L)
            if st != OK:
                return st
            if record:
                faces = ws[9]
                for r in range(m):
                    fx_east[r, i - g, j - j0] = faces[0, r]
                    fx_west[r, i - g, j - j0] = faces[1, r]
                    fy_north[r, i - g, j - j0] = faces[2, r]
                    fy_south[r, i - g, j - j0] = faces[3, r]
            for r in range(m):
                old = U[r, i, j]
                new = old + dt * L[r]
                incr[r, i - g, j - j0] = new - old
                U[r, i, j] = new
    return OK


@njit(cache=True)
def pointwise_operator(U, rhs, ip, fp, aux, wallx, wally):
    """L at every interior point, each point computing its own faces."""
    m = ip[1]
    dim = ip[2]
    g = 3
    nx = U.shape[1] - 2 * g
    if dim == 2:
        ny = U.shape[2] - 2 * g
        j0 = g
    else:
        ny = 1
        j0 = 0
    ws = _scratch(m)
    L = np.empty(m)
    for ii in range(nx):
        for jj in range(ny):
            st = point_operator(U, g + ii, j0 + jj, ip, fp, aux, wallx, wally, ws, L)
            if st != OK:
                return st
            for r in range(m):
                rhs[r, ii, jj] = L[r]
    return OK


@njit(cache=True)
def face_flux_from(U, d, fi, k, owner, ip, fp, wallx, wally, out):
    """Flux on face fi+1/2 along direction ``d`` on line ``k`` seen from ``owner``."""
    m = ip[1]
    has_walls = ip[5] != 0
    win, fl, wc, fc, Lm, Rm, hc, fa, fb, _ = _scratch(m)
    if d == 0:
        gather_x(U, fi, k, owner, m, has_walls, wallx, win)
        return line_flux(win, 0, fp[2], ip, fp, fl, wc, fc, Lm, Rm, hc, out)
    gather_y(U, k, fi, owner, m, has_walls, wally, win)
    return line_flux(win, 1, fp[3], ip, fp, fl, wc, fc, Lm, Rm, hc, out)
