"""Pivoting solver for min over x of max_i (a_i * x + b_i).

Each constraint a*x + b <= t maps to the dual point (a, -b).  The optimal
objective is determined by the edge of the dual points' lower convex hull
that crosses the vertical axis.  The solver finds that edge by alternately
scanning the negative-x and positive-x dual sets for the extreme-slope
point, never touching points that cannot improve the current supporting
line.  All comparisons are decided by exact sign predicates; the only
division happens once at the end, when the answer line's slope is formed.
"""

from __future__ import annotations

import math
from typing import Literal, Sequence

from .errors import ContractViolation, EmptyProblem, NonFiniteInput
from .geometry import Point2, _product_sign
from .model import Constraint2, Solution2, Status

__all__ = [
    "expand_absolute",
    "to_dual_points",
    "partition",
    "advance",
    "solve",
    "solve_boxed",
    "check_certificate",
]

_EPS = 2.0 ** -53
_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
_NO_UNDERFLOW = 1e-280


def expand_absolute(rows: Sequence) -> list[Constraint2]:
    """Rewrite residual terms |a*x + c| as constraint pairs.

    Each row contributes (a, c) and (-a, -c): both signed copies must stay
    below the objective bound, so the pair encodes the absolute value.
    """
    if not rows:
        raise EmptyProblem("no residuals to expand")
    out: list[Constraint2] = []
    for r in rows:
        a, c = r[0], r[1]
        out.append(Constraint2(a, c))
        out.append(Constraint2(-a, -c))
    return out


def to_dual_points(cs: Sequence) -> list[Point2]:
    """Map each constraint (a, b) to its dual point (a, -b)."""
    return [Point2(c[0], -c[1]) for c in cs]


def partition(dp: Sequence[Point2]) -> tuple[list[Point2], list[Point2]]:
    """Split dual points into L (x <= 0) and R (x > 0).

    Points exactly on the vertical axis go to L; the pivot rules treat them
    like any other left point.
    """
    left: list[Point2] = []
    right: list[Point2] = []
    for p in dp:
        if p[0] <= 0.0:
            left.append(p)
        else:
            right.append(p)
    return left, right


def _scan(xs: list[float], ys: list[float], idxs: list[int],
          fx: float, fy: float) -> int:
    """Index of the candidate with minimal slope seen from (fx, fy).

    Candidates must all lie strictly on one side of the fixed point in x.
    A candidate wins when it lies strictly below the line through the fixed
    point and the current best; exact collinear ties go to the candidate
    farthest from the fixed point in x.  The float fast path only ever
    decides cases that are safely outside the rounding error bound.
    """
    best = idxs[0]
    bx = xs[best] - fx
    by = ys[best] - fy
    babs = abs(bx)
    for j in idxs:
        cx = xs[j] - fx
        cy = ys[j] - fy
        p = bx * cy
        q = by * cx
        if p > 0.0:
            if q <= 0.0:
                continue
            detsum = p + q
        elif p < 0.0:
            if q >= 0.0:
                best = j
                bx = cx
                by = cy
                babs = abs(cx)
                continue
            detsum = -p - q
        else:
            if q > 0.0:
                best = j
                bx = cx
                by = cy
                babs = abs(cx)
                continue
            if q < 0.0:
                continue
            if (bx == 0.0 or cy == 0.0) and (by == 0.0 or cx == 0.0):
                s = 0
            else:
                s = _product_sign(bx, by, cx, cy)
            if s < 0 or (s == 0 and abs(cx) > babs):
                best = j
                bx = cx
                by = cy
                babs = abs(cx)
            continue
        det = p - q
        if detsum >= _NO_UNDERFLOW:
            err = _ERRBOUND * detsum
            if det > err:
                continue
            if det < -err:
                best = j
                bx = cx
                by = cy
                babs = abs(cx)
                continue
        s = _product_sign(bx, by, cx, cy)
        if s < 0 or (s == 0 and abs(cx) > babs):
            best = j
            bx = cx
            by = cy
            babs = abs(cx)
    return best


def advance(fixed: Point2, candidates: Sequence[Point2],
            side: Literal["L", "R"]) -> Point2:
    """Extreme-turn pivot step.

    With side "R" the fixed point is on the left and the result is the
    candidate minimising the slope of the line from the fixed point; with
    side "L" it is the left candidate maximising the slope of the line into
    the fixed point.  Either way no candidate ends up strictly below the
    chosen line.
    """
    if not candidates:
        raise ContractViolation("advance: empty candidate set")
    xs = [p[0] for p in candidates]
    idxs = list(range(len(candidates)))
    if side == "R":
        ys = [p[1] for p in candidates]
        i = _scan(xs, ys, idxs, fixed[0], fixed[1])
    elif side == "L":
        # Negating y turns the maximal-slope rule into the minimal-slope
        # scan without touching the exactness of any comparison.
        ys = [-p[1] for p in candidates]
        i = _scan(xs, ys, idxs, fixed[0], -fixed[1])
    else:
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return Point2(candidates[i][0], candidates[i][1])


def solve(cs: Sequence) -> Solution2:
    """Minimise max_i (a_i * x + b_i) over all real x.

    Returns UNBOUNDED when every slope is strictly positive or strictly
    negative.  Otherwise the result is OPTIMAL; t is the unique optimal
    objective and x one point attaining it.
    """
    if not cs:
        raise EmptyProblem("solve: no constraints")
    n = len(cs)
    isfin = math.isfinite
    dpx = [0.0] * n
    dpy = [0.0] * n
    left: list[int] = []
    right: list[int] = []
    for i, c in enumerate(cs):
        a = c[0]
        b = c[1]
        if not (isfin(a) and isfin(b)):
            raise NonFiniteInput(f"constraint {i} is not finite")
        dpx[i] = a
        dpy[i] = -b
        if a <= 0.0:
            left.append(i)
        else:
            right.append(i)
    if not left:
        return Solution2(Status.UNBOUNDED)
    if not right:
        if all(dpx[i] == 0.0 for i in left):
            # Every slope is zero: the objective is the constant max b_i.
            return Solution2(Status.OPTIMAL, x=0.0, t=-min(dpy), iterations=0)
        # Slopes are all <= 0 with at least one negative: mirror x so the
        # strictly negative slopes land on the right side, solve, mirror back.
        mirrored = [Constraint2(-c[0], c[1]) for c in cs]
        sol = solve(mirrored)
        if sol.status is Status.UNBOUNDED:
            return sol
        pairs = tuple((Point2(-pl.x, pl.y), Point2(-pr.x, pr.y))
                      for pl, pr in sol.pivot_pairs)
        return Solution2(Status.OPTIMAL, x=-sol.x, t=sol.t,
                         iterations=sol.iterations, pivot_pairs=pairs)

    dpy_neg = [-v for v in dpy]

    # Start from the lowest left point (ties to the smaller x); any left
    # point is a valid start, the lowest one just pivots less.
    i_l = left[0]
    ly = dpy[i_l]
    lx = dpx[i_l]
    for i in left:
        y = dpy[i]
        if y < ly or (y == ly and dpx[i] < lx):
            i_l = i
            ly = y
            lx = dpx[i]

    pairs: list[tuple[int, int]] = []
    iters = 1
    i_r = _scan(dpx, dpy, right, dpx[i_l], dpy[i_l])
    pairs.append((i_l, i_r))
    limit = 2 * n * n + 64
    while True:
        j = _scan(dpx, dpy_neg, left, dpx[i_r], dpy_neg[i_r])
        iters += 1
        if j == i_l:
            break
        i_l = j
        pairs.append((i_l, i_r))
        j = _scan(dpx, dpy, right, dpx[i_l], dpy[i_l])
        iters += 1
        if j == i_r:
            break
        i_r = j
        pairs.append((i_l, i_r))
        if iters > limit:
            raise ContractViolation("pivot loop exceeded its iteration bound")

    x1 = dpx[i_l]
    y1 = dpy[i_l]
    m = (dpy[i_r] - y1) / (dpx[i_r] - x1)
    t = m * x1 - y1
    recorded = tuple((Point2(dpx[a], dpy[a]), Point2(dpx[b], dpy[b]))
                     for a, b in pairs)
    return Solution2(Status.OPTIMAL, x=m, t=t, iterations=iters,
                     pivot_pairs=recorded)


def solve_boxed(cs: Sequence, lo: float, hi: float) -> Solution2:
    """Minimise max_i (a_i * x + b_i) over x in [lo, hi].

    Runs the unconstrained solver first; when its optimum falls outside the
    box (or the problem is unbounded) the objective is convex piecewise
    linear, so the boxed optimum sits at the nearer endpoint.
    """
    if not cs:
        raise EmptyProblem("solve_boxed: no constraints")
    if not lo <= hi:
        raise ValueError(f"invalid box: lo={lo!r} > hi={hi!r}")
    sol = solve(cs)
    if sol.status is Status.OPTIMAL and lo <= sol.x <= hi:
        return sol
    if sol.status is Status.OPTIMAL:
        end = lo if sol.x < lo else hi
    else:
        # All slopes share a strict sign: increasing means the minimum is at
        # the left endpoint, decreasing at the right one.
        end = lo if cs[0][0] > 0.0 else hi
    t = max(c[0] * end + c[1] for c in cs)
    return Solution2(Status.OPTIMAL, x=end, t=t, iterations=sol.iterations)


def check_certificate(cs: Sequence, sol: Solution2, eps: float) -> bool:
    """Linear-time global optimality check for a claimed optimum.

    True iff every constraint value at sol.x stays below sol.t + eps and the
    eps-active set contains both a slope <= 0 and a slope >= 0; for a convex
    piecewise-linear maximum that certifies a global minimum.
    """
    if sol.status is not Status.OPTIMAL:
        raise ValueError("certificate check requires an optimal solution")
    x = sol.x
    t_hi = sol.t + eps
    t_lo = sol.t - eps
    has_down = False
    has_up = False
    for c in cs:
        a = c[0]
        v = a * x + c[1]
        if v > t_hi:
            return False
        if v >= t_lo:
            if a <= 0.0:
                has_down = True
            if a >= 0.0:
                has_up = True
    return has_down and has_up
