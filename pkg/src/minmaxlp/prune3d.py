"""Safe constraint discarding for the box-constrained two-variable problem.

Constraints map to dual points (a, b, -c).  Relative to a dual point of
minimal z, two classes of points can be dropped without changing the
objective anywhere on the closed unit box: points "behind" it (smaller x
and y, larger z), whose supporting planes all slope downward in x or y,
and points "too steep" with respect to it, whose supporting planes all
rise faster than 1 in x or in y.  Either way the supporting slope leaves
the box, so at every box point some surviving constraint attains the
maximum and the pruned problem is exactly equivalent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyProblem
from .geometry import Point3, _sum_diff_sign
from .model import Constraint2, Constraint3, Solution2, Solution3
from .oracle import brute3d_box
from .solver2d import solve_boxed

__all__ = [
    "PruneReport",
    "find_pmin",
    "is_behind",
    "is_too_steep",
    "prune",
    "solve3d",
    "boundary_via_2d",
]

EDGE_IDS = ("x=0", "x=1", "y=0", "y=1")


@dataclass(frozen=True)
class PruneReport:
    """Result of one pruning pass.

    ``kept`` preserves input order; ``pmin_index`` refers to the original
    constraint list and always appears in ``kept_indices``.
    ``pairs_examined`` counts behind/steep evaluations (one per non-anchor
    point, the pass is single-sweep).
    """

    kept: tuple[Constraint3, ...]
    kept_indices: tuple[int, ...]
    discarded_behind: int
    discarded_steep: int
    pmin_index: int
    pairs_examined: int


def find_pmin(dp: Sequence[Point3]) -> int:
    """Index of a point with minimal z; ties resolve to the smallest (x, y).

    Any minimal-z point works as the pruning anchor, the tie rule only
    pins determinism.
    """
    if not dp:
        raise EmptyProblem("find_pmin: no points")
    best = 0
    bz, bx, by = dp[0][2], dp[0][0], dp[0][1]
    for i in range(1, len(dp)):
        x, y, z = dp[i][0], dp[i][1], dp[i][2]
        if z < bz or (z == bz and (x < bx or (x == bx and y < by))):
            best, bx, by, bz = i, x, y, z
    return best


def is_behind(p: Point3, q: Point3) -> bool:
    """True iff p.x < q.x, p.y < q.y and p.z > q.z, all strictly."""
    return p[0] < q[0] and p[1] < q[1] and p[2] > q[2]


def is_too_steep(p: Point3, q: Point3) -> bool:
    """True iff p exceeds q in every coordinate and rises faster than the
    combined run: (p.z - q.z) > (p.x - q.x) + (p.y - q.y).

    The combined-run form is what makes discarding safe.  Any plane through
    p that supports the point set from below satisfies
    A*(p.x - q.x) + B*(p.y - q.y) >= (p.z - q.z) at q, so a rise exceeding
    the summed runs forces A > 1 or B > 1; testing each run separately
    would also discard points that support faces with both slopes inside
    the unit box.  The comparison is evaluated exactly and division-free;
    equality keeps the point.
    """
    if not (p[0] > q[0] and p[1] > q[1] and p[2] > q[2]):
        return False
    return _sum_diff_sign((p[2], q[0], q[1]), (q[2], p[0], p[1])) > 0


def prune(cs: Sequence) -> PruneReport:
    """Single pass dropping every dual point behind or too steep w.r.t. the anchor."""
    if not cs:
        raise EmptyProblem("prune: no constraints")
    dp = [Point3(c[0], c[1], -c[2]) for c in cs]
    anchor_i = find_pmin(dp)
    anchor = dp[anchor_i]
    kept: list[Constraint3] = []
    kept_idx: list[int] = []
    n_behind = 0
    n_steep = 0
    examined = 0
    for i, p in enumerate(dp):
        if i == anchor_i:
            kept.append(Constraint3(*cs[i][:3]))
            kept_idx.append(i)
            continue
        examined += 1
        if is_behind(p, anchor):
            n_behind += 1
            continue
        if is_too_steep(p, anchor):
            n_steep += 1
            continue
        kept.append(Constraint3(*cs[i][:3]))
        kept_idx.append(i)
    return PruneReport(kept=tuple(kept), kept_indices=tuple(kept_idx),
                       discarded_behind=n_behind, discarded_steep=n_steep,
                       pmin_index=anchor_i, pairs_examined=examined)


def boundary_via_2d(cs: Sequence) -> list[tuple[str, Solution2]]:
    """Solve the four box-edge restrictions as one-variable problems.

    Fixing one coordinate of the box turns every constraint into a line in
    the free variable; each edge is then exactly a boxed one-variable
    min-max over [0, 1].
    """
    if not cs:
        raise EmptyProblem("boundary_via_2d: no constraints")
    rows = [(c[0], c[1], c[2]) for c in cs]
    induced = {
        "x=0": [Constraint2(b, c) for a, b, c in rows],
        "x=1": [Constraint2(b, a + c) for a, b, c in rows],
        "y=0": [Constraint2(a, c) for a, b, c in rows],
        "y=1": [Constraint2(a, b + c) for a, b, c in rows],
    }
    return [(edge, solve_boxed(induced[edge], 0.0, 1.0)) for edge in EDGE_IDS]


def solve3d(cs: Sequence, validate: bool = False) -> Solution3:
    """Prune, then minimise over the unit box with the exhaustive oracle.

    Discarded constraints never attain the maximum anywhere on the box, so
    the reduced problem has the same optimum as the full one while the
    cubic interior enumeration runs on fewer constraints.  With
    ``validate`` the four edge restrictions of the full problem are solved
    as well and checked for consistency: no edge value may undercut the
    reported optimum, and when the optimum sits on the boundary the best
    edge value must match it.
    """
    if not cs:
        raise EmptyProblem("solve3d: no constraints")
    report = prune(cs)
    sol = brute3d_box(report.kept)
    if validate:
        edge_best = min(s.t for _, s in boundary_via_2d(cs))
        tol = 1e-9 * max(1.0, abs(sol.t))
        if edge_best < sol.t - tol:
            raise AssertionError(
                f"boundary value {edge_best} undercuts reported optimum {sol.t}")
        on_edge = sol.x in (0.0, 1.0) or sol.y in (0.0, 1.0)
        if on_edge and abs(edge_best - sol.t) > tol:
            raise AssertionError(
                f"boundary optimum {sol.t} not reproduced by edge solves "
                f"(best {edge_best})")
    return sol
