"""Brute-force reference solvers.

These are the ground truth for every correctness property in the test
suite.  They enumerate candidate optima exhaustively and evaluate the
objective at each one, trading speed for being obviously right: the 1D
oracle is quadratic in the constraint count, the boxed 2D oracle cubic.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyProblem, NonFiniteInput
from .model import Solution2, Solution3, Status

__all__ = ["brute2d", "brute3d_box"]


def _as_columns(cs, width):
    arr = np.asarray([tuple(c) for c in cs], dtype=float)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f"expected {width}-field constraints")
    if not np.isfinite(arr).all():
        raise NonFiniteInput("constraints must be finite")
    return [arr[:, k] for k in range(width)]


def _eval_max_1d(a, b, xs):
    """max_i (a_i * x + b_i) for every x in xs.

    One in-place pass per constraint keeps the candidate vector cache
    resident instead of materialising the candidates-by-constraints matrix.
    """
    acc = np.full(xs.size, -np.inf)
    tmp = np.empty(xs.size)
    for i in range(a.size):
        np.multiply(xs, a[i], out=tmp)
        tmp += b[i]
        np.maximum(acc, tmp, out=acc)
    return acc


def brute2d(cs) -> Solution2:
    """Minimise max_i (a_i * x + b_i) by enumerating all crossings.

    The optimum of a convex piecewise-linear maximum is attained where two
    constraint lines meet, so evaluating the objective at every pairwise
    intersection abscissa and taking the smallest value is exact up to
    float evaluation.  Ties in t resolve to the smallest x.
    """
    if len(cs) == 0:
        raise EmptyProblem("brute2d: no constraints")
    a, b = _as_columns(cs, 2)
    if (a > 0).all() or (a < 0).all():
        return Solution2(Status.UNBOUNDED)
    if (a == 0).all():
        return Solution2(Status.OPTIMAL, x=0.0, t=float(b.max()), iterations=0)
    ii, jj = np.triu_indices(a.size, k=1)
    da = a[ii] - a[jj]
    keep = da != 0.0
    xs = (b[jj] - b[ii])[keep] / da[keep]
    ts = _eval_max_1d(a, b, xs)
    k = np.lexsort((xs, ts))[0]
    return Solution2(Status.OPTIMAL, x=float(xs[k]), t=float(ts[k]),
                     iterations=0)


def _edge_candidates(s, o):
    """Candidate abscissas in [0, 1] for the 1D problem max(s*x + o)."""
    ii, jj = np.triu_indices(s.size, k=1)
    ds = s[ii] - s[jj]
    keep = ds != 0.0
    xs = (o[jj] - o[ii])[keep] / ds[keep]
    return xs[(xs >= 0.0) & (xs <= 1.0)]


def _triple_candidates(a, b, c):
    """In-box solutions (x, y) of all three-way equal-value systems."""
    n = a.size
    if n < 3:
        return np.empty(0), np.empty(0)
    ii, jj, kk = np.array(
        np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    ).reshape(3, -1)
    tri = (ii < jj) & (jj < kk)
    ii, jj, kk = ii[tri], jj[tri], kk[tri]
    a1 = a[ii] - a[jj]
    b1 = b[ii] - b[jj]
    r1 = c[jj] - c[ii]
    a2 = a[ii] - a[kk]
    b2 = b[ii] - b[kk]
    r2 = c[kk] - c[ii]
    det = a1 * b2 - b1 * a2
    ok = det != 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        x = (r1 * b2 - b1 * r2) / det
        y = (a1 * r2 - r1 * a2) / det
    ok &= (x >= 0.0) & (x <= 1.0) & (y >= 0.0) & (y <= 1.0)
    return x[ok], y[ok]


def _eval_max_2d(a, b, c, xs, ys):
    """max_i (a_i*x + b_i*y + c_i) at every candidate point."""
    ts = np.full(xs.size, -np.inf)
    tmp = np.empty(xs.size)
    tmp2 = np.empty(xs.size)
    for i in range(a.size):
        np.multiply(xs, a[i], out=tmp)
        np.multiply(ys, b[i], out=tmp2)
        tmp += tmp2
        tmp += c[i]
        np.maximum(ts, tmp, out=ts)
    return ts


def brute3d_box(cs) -> Solution3:
    """Minimise max_i (a_i*x + b_i*y + c_i) over the unit box.

    Candidates cover every place the minimum can occur: points where three
    constraint planes meet at equal value (interior vertices of the upper
    envelope), the equal-value points of each induced one-variable problem
    on the four box edges, and the four corners.  Singular triple systems
    are skipped; whatever optimum they might describe is degenerate and is
    still covered by the remaining candidates.  Ties go to the smallest
    (x, y) lexicographically.
    """
    if len(cs) == 0:
        raise EmptyProblem("brute3d_box: no constraints")
    a, b, c = _as_columns(cs, 3)

    px = [np.zeros(1), np.zeros(1), np.ones(1), np.ones(1)]
    py = [np.zeros(1), np.ones(1), np.zeros(1), np.ones(1)]

    tx, ty = _triple_candidates(a, b, c)
    px.append(tx)
    py.append(ty)

    x0 = _edge_candidates(b, c)                 # x = 0, free variable y
    px.append(np.zeros(x0.size))
    py.append(x0)
    x1 = _edge_candidates(b, a + c)             # x = 1
    px.append(np.ones(x1.size))
    py.append(x1)
    y0 = _edge_candidates(a, c)                 # y = 0, free variable x
    px.append(y0)
    py.append(np.zeros(y0.size))
    y1 = _edge_candidates(a, b + c)             # y = 1
    px.append(y1)
    py.append(np.ones(y1.size))

    cx = np.concatenate(px)
    cy = np.concatenate(py)
    ts = _eval_max_2d(a, b, c, cx, cy)
    k = np.lexsort((cy, cx, ts))[0]
    return Solution3(x=float(cx[k]), y=float(cy[k]), t=float(ts[k]))
