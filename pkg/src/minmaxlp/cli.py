"""Command-line frontend.

Constraint files hold one constraint per line, fields comma- or
whitespace-separated: two fields (a, b) for the one-variable problem,
three (a, b, c) for the boxed two-variable problem.  Blank lines and lines
starting with '#' are ignored; the field count must be uniform.  Floats
are printed with Python's shortest round-trip representation, so emitted
corpora re-parse to bit-identical values.

Exit codes: 0 success (an unbounded verdict is a valid answer),
2 input error, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from pathlib import Path

from . import bench as bench_mod
from .baseline import solve_baseline
from .errors import (ContractViolation, EmptyProblem, MixedArity,
                     NonFiniteInput, ParseError)
from .instances import GenSpec, gen2d, gen3d
from .model import Constraint2, Constraint3, Solution2, Solution3, Status
from .oracle import brute2d, brute3d_box
from .prune3d import PruneReport, prune, solve3d
from .solver2d import expand_absolute, solve

__all__ = ["parse_constraints", "emit_solution", "main"]

_VALIDATE_3D_MAX_N = 60


def parse_constraints(text: str) -> list[Constraint2] | list[Constraint3]:
    """Parse constraint text; arity (2 or 3 fields) picks the problem type."""
    rows: list[tuple[float, ...]] = []
    arity: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.replace(",", " ").split()
        try:
            vals = tuple(float(f) for f in fields)
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse {line!r}",
                             line=lineno) from None
        if not all(math.isfinite(v) for v in vals):
            raise ParseError(f"line {lineno}: non-finite value", line=lineno)
        if len(vals) not in (2, 3):
            raise ParseError(
                f"line {lineno}: expected 2 or 3 fields, got {len(vals)}",
                line=lineno)
        if arity is None:
            arity = len(vals)
        elif len(vals) != arity:
            raise MixedArity(
                f"line {lineno}: expected {arity} fields, got {len(vals)}",
                line=lineno)
        rows.append(vals)
    if arity is None:
        raise EmptyProblem("no constraints in input")
    if arity == 2:
        return [Constraint2(*r) for r in rows]
    return [Constraint3(*r) for r in rows]


def _solution_dict(sol) -> dict:
    if isinstance(sol, Solution2):
        if sol.status is Status.UNBOUNDED:
            return {"status": "unbounded"}
        return {"status": "optimal", "x": sol.x, "t": sol.t,
                "iterations": sol.iterations}
    if isinstance(sol, Solution3):
        return {"status": "optimal", "x": sol.x, "y": sol.y, "t": sol.t}
    if isinstance(sol, PruneReport):
        return {"kept": list(sol.kept_indices),
                "discarded_behind": sol.discarded_behind,
                "discarded_steep": sol.discarded_steep,
                "pmin_index": sol.pmin_index}
    raise TypeError(f"cannot emit {type(sol).__name__}")


def emit_solution(sol, fmt: str = "json") -> str:
    """Render a solution or prune report as json or tsv text."""
    d = _solution_dict(sol)
    if fmt == "json":
        return json.dumps(d)
    if fmt == "tsv":
        return "\n".join(
            f"{k}\t{','.join(map(repr, v)) if isinstance(v, list) else v!r}"
            if not isinstance(v, str) else f"{k}\t{v}"
            for k, v in d.items())
    raise ValueError(f"unknown format {fmt!r}")


def _format_constraints(cs) -> str:
    return "\n".join(",".join(repr(float(v)) for v in c) for c in cs) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _require_arity(cs, want: int, sub: str):
    have = len(cs[0])
    if have != want:
        raise ParseError(
            f"{sub} needs {want}-field constraints, input has {have}")


def _cmd_solve2d(args) -> int:
    cs = parse_constraints(_read_input(args.input))
    _require_arity(cs, 2, "solve2d")
    if args.mode == "abs":
        cs = expand_absolute(cs)
    sol = solve(cs)
    if args.validate:
        ref = solve_baseline(cs)
        _compare_2d(sol, ref)
    print(emit_solution(sol, args.format))
    return 0


def _compare_2d(sol: Solution2, ref: Solution2) -> None:
    if sol.status is not ref.status:
        raise ContractViolation(
            f"validation failed: status {sol.status.value} vs {ref.status.value}")
    if sol.status is Status.OPTIMAL:
        tol = 1e-12 * max(1.0, abs(ref.t))
        if abs(sol.t - ref.t) > tol:
            raise ContractViolation(
                f"validation failed: t={sol.t} vs baseline {ref.t}")


def _cmd_solve3d(args) -> int:
    cs = parse_constraints(_read_input(args.input))
    _require_arity(cs, 3, "solve3d")
    if args.mode == "abs":
        cs = [c for row in cs
              for c in (Constraint3(*row), Constraint3(-row[0], -row[1], -row[2]))]
    if args.validate and len(cs) > _VALIDATE_3D_MAX_N:
        raise ParseError(
            f"--validate supports at most {_VALIDATE_3D_MAX_N} constraints "
            f"in 3D, got {len(cs)}")
    sol = solve3d(cs, validate=args.validate)
    if args.validate:
        ref = brute3d_box(cs)
        tol = 1e-9 * max(1.0, abs(ref.t))
        if abs(sol.t - ref.t) > tol:
            raise ContractViolation(
                f"validation failed: t={sol.t} vs oracle {ref.t}")
    print(emit_solution(sol, args.format))
    return 0


def _cmd_prune3d(args) -> int:
    cs = parse_constraints(_read_input(args.input))
    _require_arity(cs, 3, "prune3d")
    report = prune(cs)
    if args.validate:
        if len(cs) > _VALIDATE_3D_MAX_N:
            raise ParseError(
                f"--validate supports at most {_VALIDATE_3D_MAX_N} "
                f"constraints in 3D, got {len(cs)}")
        full = brute3d_box(cs)
        kept = brute3d_box(report.kept)
        tol = 1e-9 * max(1.0, abs(full.t))
        if abs(full.t - kept.t) > tol:
            raise ContractViolation(
                f"validation failed: pruned t={kept.t} vs full t={full.t}")
    print(emit_solution(report, args.format))
    return 0


def _cmd_oracle(args) -> int:
    cs = parse_constraints(_read_input(args.input))
    if len(cs[0]) == 2:
        if args.mode == "abs":
            cs = expand_absolute(cs)
        sol = brute2d(cs)
        if args.validate:
            _compare_2d(sol, solve_baseline(cs))
    else:
        if args.mode == "abs":
            cs = [c for row in cs for c in
                  (Constraint3(*row), Constraint3(-row[0], -row[1], -row[2]))]
        sol = brute3d_box(cs)
    print(emit_solution(sol, args.format))
    return 0


def _cmd_gen(args) -> int:
    spec = GenSpec(n=args.n, sigma=args.sigma, seed=args.seed, dim=args.dim)
    make = gen2d if args.dim == 2 else gen3d
    if args.count == 1 and args.out_dir is None:
        text = _format_constraints(make(spec, index=args.index))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return 0
    out_dir = Path(args.out_dir or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        text = _format_constraints(make(spec, index=args.index + k))
        (out_dir / f"instance_{args.index + k:05d}.txt").write_text(
            text, encoding="utf-8")
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    solvers = args.solver.split(",")
    all_results: dict[str, list[bench_mod.BenchResult]] = {}
    for solver in solvers:
        all_results[solver] = bench_mod.run_scaling(
            solver, sizes, args.batch, args.seed)
    header = (f"{'solver':>14} {'n':>9} {'batch':>6} {'mean_ms':>10} "
              f"{'median_ms':>10} {'pivots':>8}")
    print(header)
    for solver, results in all_results.items():
        for r in results:
            piv = f"{r.mean_iterations:.1f}" if r.mean_iterations else "-"
            print(f"{r.solver:>14} {r.n:>9} {r.batch:>6} "
                  f"{r.mean_s * 1e3:>10.3f} {r.median_s * 1e3:>10.3f} "
                  f"{piv:>8}")
    report: dict = {"sizes": sizes, "batch": args.batch, "seed": args.seed,
                    "results": {s: [asdict(r) for r in rs]
                                for s, rs in all_results.items()}}
    for solver, results in all_results.items():
        if len(results) >= 2:
            slope = bench_mod.fit_loglog_slope(results)
            report.setdefault("loglog_slope", {})[solver] = slope
            print(f"log-log slope ({solver}): {slope:.3f}")
    if "hough2d" in all_results and "baseline_hull" in all_results:
        ratios = {r.n: b.mean_s / r.mean_s
                  for r, b in zip(all_results["hough2d"],
                                  all_results["baseline_hull"])}
        report["baseline_over_hough_time_ratio"] = ratios
        for n, ratio in ratios.items():
            print(f"baseline/hough time ratio at n={n}: {ratio:.2f}")
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2),
                                     encoding="utf-8")
    if args.csv:
        lines = ["solver,n,batch,total_s,mean_s,median_s,"
                 "mean_iterations,max_iterations"]
        for results in all_results.values():
            for r in results:
                lines.append(
                    f"{r.solver},{r.n},{r.batch},{r.total_s!r},{r.mean_s!r},"
                    f"{r.median_s!r},{r.mean_iterations},{r.max_iterations}")
        Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minmaxlp",
        description="Solvers and tools for linear min-max problems.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p, validate_help):
        p.add_argument("input", help="constraint file, or '-' for stdin")
        p.add_argument("--mode", choices=("lp", "abs"), default="lp",
                       help="abs treats rows as |.| residuals and expands "
                            "them into constraint pairs")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--validate", action="store_true", help=validate_help)

    p = sub.add_parser("solve2d", help="pivoting solver, one variable")
    add_io(p, "cross-check against the hull baseline")
    p.set_defaults(fn=_cmd_solve2d)

    p = sub.add_parser("solve3d", help="prune + oracle over the unit box")
    add_io(p, "cross-check against the unpruned oracle (n <= 60)")
    p.set_defaults(fn=_cmd_solve3d)

    p = sub.add_parser("prune3d", help="report safe constraint discards")
    p.add_argument("input", help="constraint file, or '-' for stdin")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--validate", action="store_true",
                   help="verify the pruned optimum matches (n <= 60)")
    p.set_defaults(fn=_cmd_prune3d)

    p = sub.add_parser("oracle", help="brute-force reference solve")
    add_io(p, "2D only: cross-check against the hull baseline")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="emit seeded Gaussian instances")
    p.add_argument("--dim", type=int, choices=(2, 3), default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=float, default=math.sqrt(10.0))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--index", type=int, default=0,
                   help="first instance index in the stream")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="output file (single instance)")
    p.add_argument("--out-dir", help="directory for multi-instance corpora")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="scaling benchmark")
    p.add_argument("--solver", default="hough2d",
                   help="comma list from: " + ",".join(bench_mod.SOLVERS))
    p.add_argument("--sizes", default="1000,10000,100000",
                   help="comma list of constraint counts")
    p.add_argument("--batch", type=int, default=100,
                   help="instances at the smallest size; larger sizes scale "
                        "down proportionally")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write a JSON report here")
    p.add_argument("--csv", help="write per-size rows as CSV here")
    p.set_defaults(fn=_cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, EmptyProblem, NonFiniteInput, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ContractViolation, AssertionError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
