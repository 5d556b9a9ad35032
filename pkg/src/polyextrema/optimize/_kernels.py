"""Compiled inner loops for the restart search.

Polygons are flat coordinate vectors ``x = (x0, y0, x1, y1, ...)``. The
functionals and the simplicity predicate mirror :mod:`polyextrema.geometry`
exactly (same eps snapping); the test suite checks the two agree.
"""

import math

import numpy as np
from numba import njit

SUMDIST = 0
SUMSQ = 1
PERIMETER = 2


@njit(cache=True)
def perimeter_k(x, n):
    total = 0.0
    for i in range(n):
        j = (i + 1) % n
        total += math.hypot(x[2 * j] - x[2 * i], x[2 * j + 1] - x[2 * i + 1])
    return total


@njit(cache=True)
def sumdist_k(x, n):
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            total += math.hypot(x[2 * j] - x[2 * i], x[2 * j + 1] - x[2 * i + 1])
    return total


@njit(cache=True)
def sumsq_k(x, n):
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            dx = x[2 * j] - x[2 * i]
            dy = x[2 * j + 1] - x[2 * i + 1]
            total += dx * dx + dy * dy
    return total


@njit(cache=True)
def _orient(ax, ay, bx, by, cx, cy, eps):
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if abs(det) < eps:
        return 0
    return 1 if det > 0 else -1


@njit(cache=True)
def _on_seg(ax, ay, bx, by, qx, qy):
    return min(ax, bx) <= qx <= max(ax, bx) and min(ay, by) <= qy <= max(ay, by)


@njit(cache=True)
def _seg_intersect(ax, ay, bx, by, cx, cy, dx, dy, eps):
    o1 = _orient(ax, ay, bx, by, cx, cy, eps)
    o2 = _orient(ax, ay, bx, by, dx, dy, eps)
    o3 = _orient(cx, cy, dx, dy, ax, ay, eps)
    o4 = _orient(cx, cy, dx, dy, bx, by, eps)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_seg(ax, ay, bx, by, cx, cy):
        return True
    if o2 == 0 and _on_seg(ax, ay, bx, by, dx, dy):
        return True
    if o3 == 0 and _on_seg(cx, cy, dx, dy, ax, ay):
        return True
    if o4 == 0 and _on_seg(cx, cy, dx, dy, bx, by):
        return True
    return False


@njit(cache=True)
def is_simple_k(x, n, eps):
    for i in range(n):
        h = (i - 1) % n
        j = (i + 1) % n
        ax, ay = x[2 * h], x[2 * h + 1]
        bx, by = x[2 * i], x[2 * i + 1]
        cx, cy = x[2 * j], x[2 * j + 1]
        if _orient(ax, ay, bx, by, cx, cy, eps) == 0:
            if (bx - ax) * (cx - bx) + (by - ay) * (cy - by) < 0:
                return False
    for i in range(n):
        i2 = (i + 1) % n
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            j2 = (j + 1) % n
            if _seg_intersect(x[2 * i], x[2 * i + 1], x[2 * i2], x[2 * i2 + 1],
                              x[2 * j], x[2 * j + 1], x[2 * j2], x[2 * j2 + 1], eps):
                return False
    return True


@njit(cache=True)
def project_k(x, n, unit_perimeter, disk):
    """Restore feasibility in place; False if the point cannot be repaired."""
    if unit_perimeter:
        per = perimeter_k(x, n)
        if not per > 1e-300 or not math.isfinite(per):
            return False
        cx = 0.0
        cy = 0.0
        for i in range(n):
            cx += x[2 * i]
            cy += x[2 * i + 1]
        cx /= n
        cy /= n
        for i in range(n):
            x[2 * i] = cx + (x[2 * i] - cx) / per
            x[2 * i + 1] = cy + (x[2 * i + 1] - cy) / per
    if disk:
        for i in range(n):
            r = math.hypot(x[2 * i], x[2 * i + 1])
            if r > 1.0:
                x[2 * i] /= r
                x[2 * i + 1] /= r
    return True


@njit(cache=True)
def objective_k(x, n, kind):
    if kind == SUMDIST:
        return sumdist_k(x, n)
    if kind == SUMSQ:
        return sumsq_k(x, n)
    return perimeter_k(x, n)


@njit(cache=True)
def loss_k(x, n, kind, sign, unit_perimeter, disk, simple, eps, out):
    """Write the projection of x to ``out``; return sign * objective there, +inf when infeasible."""
    out[:] = x
    if not project_k(out, n, unit_perimeter, disk):
        return np.inf
    if simple and not is_simple_k(out, n, eps):
        return np.inf
    return sign * objective_k(out, n, kind)


@njit(cache=True)
def _record(trace, trace_vals, count, x, value, n, unit_perimeter, disk):
    # stores the projected (feasible) polygon, not the raw simplex vertex
    if count < trace.shape[0]:
        trace[count, :] = x
        project_k(trace[count], n, unit_perimeter, disk)
        trace_vals[count] = value
    return count + 1


@njit(cache=True)
def nelder_mead_k(x0, n, kind, sign, unit_perimeter, disk, simple, eps,
                  step, max_iters, trace, trace_vals):
    """Adaptive Nelder-Mead on the projected loss, restarted from the best vertex until stalled.

    The simplex keeps raw coordinates; every trial is scored on its
    projection, and infeasible trials score +inf so they are never accepted.
    The projections of accepted vertices are appended to ``trace`` while it
    has room. Returns (best projected x, best loss, iterations, trace_count).
    """
    dim = x0.size
    alpha = 1.0
    gamma = 1.0 + 2.0 / dim
    rho = 0.75 - 1.0 / (2.0 * dim)
    sigma = 1.0 - 1.0 / dim

    sim = np.empty((dim + 1, dim))
    fv = np.empty(dim + 1)
    c = np.empty(dim)
    xr = np.empty(dim)
    xe = np.empty(dim)
    xc = np.empty(dim)
    proj = np.empty(dim)

    best = x0.copy()
    best_f = loss_k(best, n, kind, sign, unit_perimeter, disk, simple, eps, proj)
    tcount = 0
    if math.isfinite(best_f):
        tcount = _record(trace, trace_vals, tcount, best, sign * best_f, n, unit_perimeter, disk)
    it = 0
    cur_step = step
    while it < max_iters:
        start_f = best_f
        for i in range(dim + 1):
            sim[i, :] = best
            if i > 0:
                sim[i, i - 1] += cur_step
                fv[i] = loss_k(sim[i], n, kind, sign, unit_perimeter, disk, simple, eps, proj)
            else:
                fv[i] = best_f
        while it < max_iters:
            it += 1
            order = np.argsort(fv, kind="mergesort")
            sim = sim[order]
            fv = fv[order]
            if math.isfinite(fv[-1]) and fv[-1] - fv[0] <= 1e-15 * (abs(fv[0]) + 1e-300):
                break
            spread = 0.0
            for i in range(1, dim + 1):
                for j in range(dim):
                    spread = max(spread, abs(sim[i, j] - sim[0, j]))
            if spread < 1e-13:
                break
            for j in range(dim):
                acc = 0.0
                for i in range(dim):
                    acc += sim[i, j]
                c[j] = acc / dim
            for j in range(dim):
                xr[j] = c[j] + alpha * (c[j] - sim[dim, j])
            fr = loss_k(xr, n, kind, sign, unit_perimeter, disk, simple, eps, proj)
            if fr < fv[0]:
                for j in range(dim):
                    xe[j] = c[j] + gamma * (xr[j] - c[j])
                fe = loss_k(xe, n, kind, sign, unit_perimeter, disk, simple, eps, proj)
                if fe < fr:
                    sim[dim, :] = xe
                    fv[dim] = fe
                else:
                    sim[dim, :] = xr
                    fv[dim] = fr
                tcount = _record(trace, trace_vals, tcount, sim[dim], sign * fv[dim], n, unit_perimeter, disk)
            elif fr < fv[dim - 1]:
                sim[dim, :] = xr
                fv[dim] = fr
                tcount = _record(trace, trace_vals, tcount, xr, sign * fr, n, unit_perimeter, disk)
            else:
                if fr < fv[dim]:
                    for j in range(dim):
                        xc[j] = c[j] + rho * (xr[j] - c[j])
                    fc = loss_k(xc, n, kind, sign, unit_perimeter, disk, simple, eps, proj)
                    ok = fc <= fr
                else:
                    for j in range(dim):
                        xc[j] = c[j] + rho * (sim[dim, j] - c[j])
                    fc = loss_k(xc, n, kind, sign, unit_perimeter, disk, simple, eps, proj)
                    ok = fc < fv[dim]
                if ok:
                    sim[dim, :] = xc
                    fv[dim] = fc
                    tcount = _record(trace, trace_vals, tcount, xc, sign * fc, n, unit_perimeter, disk)
                else:
                    for i in range(1, dim + 1):
                        for j in range(dim):
                            sim[i, j] = sim[0, j] + sigma * (sim[i, j] - sim[0, j])
                        fv[i] = loss_k(sim[i], n, kind, sign, unit_perimeter, disk, simple, eps, proj)
                        if math.isfinite(fv[i]):
                            tcount = _record(trace, trace_vals, tcount, sim[i], sign * fv[i], n, unit_perimeter, disk)
        k = np.argmin(fv)
        if fv[k] < best_f:
            best[:] = sim[k]
            best_f = fv[k]
        if not start_f - best_f > 1e-12 * (abs(best_f) + 1e-300):
            break
        cur_step = 0.5 * cur_step
    project_k(best, n, unit_perimeter, disk)
    return best, best_f, it, tcount
