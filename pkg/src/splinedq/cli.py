"""Batch command-line front end: solve, convergence sweeps, stability checks.

All outputs are files (written atomically) plus a terse stdout summary; runs
are fully deterministic.  The output directory comes from --out or the
SPLINEDQ_OUT environment variable.
"""

import argparse
import os
import sys
import tempfile

import numpy as np

from . import basis as basis_mod
from .benchmarks import (CSV_HEADER, problem1, problem2, problem3,
                         report_csv_row, reports_json, run_experiment,
                         run_sweep, write_field_dump)
from .grid import make_grid
from .operator import DENSE_INTERIOR_CAP, assemble_operator
from .stability import check_stability, write_spectrum_csv
from .weights import build_weight_set


def _atomic_write(path, text):
    d = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _basis_from_args(args):
    if args.basis == "trig":
        return basis_mod.trigonometric()
    if args.basis == "exp":
        if args.p is None:
            raise ValueError("--basis exp requires --p > 0")
        return basis_mod.exponential(args.p)
    if args.basis == "ext":
        lam = 0.0 if args.lam is None else args.lam
        return basis_mod.extended(lam)
    raise ValueError(f"unknown basis {args.basis!r}")


def _problem_from_args(args):
    if args.problem == 1:
        dom = tuple(args.domain) if args.domain else (1.0, 2.0, 1.0, 2.0)
        return problem1(alpha_x=args.alpha_x if args.alpha_x is not None else 0.05,
                        alpha_y=args.alpha_y if args.alpha_y is not None else
                        (args.alpha_x if args.alpha_x is not None else 0.05),
                        beta_x=args.beta_x if args.beta_x is not None else 0.8,
                        beta_y=args.beta_y if args.beta_y is not None else
                        (args.beta_x if args.beta_x is not None else 0.8),
                        domain=dom)
    if args.problem == 2:
        return problem2(alpha=args.alpha_x if args.alpha_x is not None else 0.1,
                        beta=args.beta_x if args.beta_x is not None else 1.0,
                        a=args.profile_a, b=args.profile_b, bc_kind=args.bc)
    if args.problem == 3:
        return problem3(cbar=args.cbar)
    raise ValueError(f"--problem must be 1, 2 or 3, got {args.problem}")


def _dt_for(args, h):
    if args.dt == "h2":
        return h * h
    try:
        dt = float(args.dt)
    except ValueError:
        raise ValueError(f"--dt must be a number or 'h2', got {args.dt!r}") from None
    if dt <= 0:
        raise ValueError(f"--dt must be positive, got {dt}")
    return dt


def _outdir(args):
    d = args.out or os.environ.get("SPLINEDQ_OUT") or "."
    os.makedirs(d, exist_ok=True)
    return d


def cmd_solve(args):
    problem = _problem_from_args(args)
    basis = _basis_from_args(args)
    h = (problem.domain[1] - problem.domain[0]) / (args.N - 1)
    dt = _dt_for(args, h)
    out = _outdir(args)

    dumps = []
    dump_times = sorted(set(args.dump_at or ([0.1, args.t] if args.problem == 3 else [])))

    def field_cb(t, U):
        for td in dump_times:
            if abs(t - td) <= 1e-9 * max(1.0, abs(td)):
                dumps.append((td, U.copy()))

    rep = run_experiment(problem, basis, args.N, dt, args.t,
                         field_callback=field_cb if dump_times else None)
    tag = f"{problem.name}-{args.basis}-N{args.N}"
    _atomic_write(os.path.join(out, f"{tag}-report.csv"),
                  CSV_HEADER + "\n" + report_csv_row(rep) + "\n")
    _atomic_write(os.path.join(out, f"{tag}-report.json"), reports_json(rep) + "\n")

    grid = make_grid(*problem.domain, args.N, args.N)
    X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
    for td, U in dumps:
        path = os.path.join(out, f"{tag}-field-t{td:g}.dat")
        write_field_dump(path, X, Y, U)

    nsteps = rep.steps
    log = [f"problem={problem.name} basis={basis.label()} N={args.N} h={h:.6g}",
           f"dt_requested={dt:.9g} dt_effective={args.t / nsteps if nsteps else dt:.9g} "
           f"steps={nsteps} t_final={args.t:.6g}",
           f"coefficients: alpha=({problem.coeffs.alpha_x:g},{problem.coeffs.alpha_y:g}) "
           f"beta=({problem.coeffs.beta_x:g},{problem.coeffs.beta_y:g})"]
    if rep.diverged:
        log.append(f"DIVERGED at step {rep.diverged_step}")
    elif rep.linf is not None:
        log.append(f"linf={rep.linf:.6g} l2={rep.l2:.6g} sse={rep.sse:.6g} "
                   f"mse={rep.mse:.6g} seconds={rep.seconds:.3f}")
    else:
        log.append(f"no exact solution; {len(dumps)} field dump(s) written; "
                   f"seconds={rep.seconds:.3f}")
    _atomic_write(os.path.join(out, f"{tag}-run.log"), "\n".join(log) + "\n")

    print("\n".join(log))
    if rep.diverged:
        print("error: time integration diverged (precondition: stable dt for this grid)",
              file=sys.stderr)
        return 3
    return 0


def cmd_convergence(args):
    if not args.sweep or len(args.sweep) < 2:
        raise ValueError("--sweep needs at least 2 grid sizes")
    problem = _problem_from_args(args)
    basis = _basis_from_args(args)
    out = _outdir(args)

    dt_rule = (lambda h: h * h) if args.dt == "h2" else float(args.dt)
    reports = run_sweep(problem, basis, args.sweep, dt_rule, args.t)

    lines = [CSV_HEADER]
    failed = 0
    for r in reports:
        lines.append(report_csv_row(r))
        if r.diverged:
            failed += 1
    tag = f"{problem.name}-{args.basis}-convergence"
    _atomic_write(os.path.join(out, f"{tag}.csv"), "\n".join(lines) + "\n")
    _atomic_write(os.path.join(out, f"{tag}.json"), reports_json(reports) + "\n")

    print(f"{'N':>5} {'h':>10} {'linf':>12} {'roc':>7} {'l2':>12} {'roc':>7}")
    for r in reports:
        if r.diverged:
            print(f"{r.N:5d} {r.h:10.4g} {'diverged':>12}")
            continue
        rl = f"{r.roc_linf:7.2f}" if r.roc_linf is not None else "      -"
        r2 = f"{r.roc_l2:7.2f}" if r.roc_l2 is not None else "      -"
        print(f"{r.N:5d} {r.h:10.4g} {r.linf:12.4e} {rl} {r.l2:12.4e} {r2}")
    return 1 if failed else 0


def cmd_stability(args):
    problem = _problem_from_args(args)
    basis = _basis_from_args(args)
    out = _outdir(args)
    sizes = args.sweep or [11, 21, 31, 41]

    all_stable = True
    max_re = -np.inf
    for N in sizes:
        if (N - 2) * (N - 2) > DENSE_INTERIOR_CAP:
            raise ValueError(
                f"N={N} exceeds the dense eigenvalue cap "
                f"(interior {(N - 2) ** 2} > {DENSE_INTERIOR_CAP})")
        grid = make_grid(*problem.domain, N, N)
        ws = build_weight_set(basis, grid)
        system = assemble_operator(problem.coeffs, ws, problem.boundary)
        dt = _dt_for(args, grid.hx)
        rep = check_stability(system, dt, label=f"N={N}")
        write_spectrum_csv(rep, os.path.join(out, f"spectrum-{args.basis}-N{N}.csv"),
                           grid_label=f"{N}x{N}", basis_label=basis.label())
        all_stable &= rep.all_in_region
        max_re = max(max_re, rep.max_real_part)
        print(f"N={N}: max Re(lambda) = {rep.max_real_part:+.3e}, "
              f"max |R(lambda dt)| = {rep.worst_amplification:.15f}, dt = {dt:.6g}")
    verdict = "stable" if all_stable else "UNSTABLE"
    print(f"verdict: {verdict} (max Re over sweep {max_re:+.3e})")
    return 0 if all_stable else 4


def build_parser():
    p = argparse.ArgumentParser(
        prog="splinedq",
        description="Spline differential-quadrature solver for 2D "
                    "convection-diffusion benchmarks")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--problem", type=int, required=True, choices=(1, 2, 3))
        sp.add_argument("--basis", required=True, choices=("trig", "exp", "ext"))
        sp.add_argument("--lambda", dest="lam", type=float, default=None,
                        help="extended-family free parameter")
        sp.add_argument("--p", type=float, default=None,
                        help="exponential-family parameter (> 0)")
        sp.add_argument("--alpha-x", type=float, default=None)
        sp.add_argument("--alpha-y", type=float, default=None)
        sp.add_argument("--beta-x", type=float, default=None)
        sp.add_argument("--beta-y", type=float, default=None)
        sp.add_argument("--domain", type=float, nargs=4, default=None,
                        metavar=("A", "B", "C", "D"))
        sp.add_argument("--bc", choices=("dirichlet", "neumann"),
                        default="dirichlet")
        sp.add_argument("--profile-a", type=float, default=1.0,
                        help="problem-2 amplitude constant")
        sp.add_argument("--profile-b", type=float, default=0.1,
                        help="problem-2 growth-rate constant")
        sp.add_argument("--cbar", type=float, default=0.0,
                        help="problem-3 boundary drift rate")
        sp.add_argument("--dt", default="h2",
                        help="time step, or 'h2' for dt = h^2")
        sp.add_argument("--t", type=float, default=1.0, help="final time")
        sp.add_argument("--out", default=None, help="output directory")

    sp = sub.add_parser("solve", help="single run with report and field dumps")
    common(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--dump-at", type=float, nargs="*", default=None,
                    help="times at which to dump the full field")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("convergence", help="grid sweep with convergence orders")
    common(sp)
    sp.add_argument("--sweep", type=int, nargs="+", required=True)
    sp.set_defaults(func=cmd_convergence)

    sp = sub.add_parser("stability", help="operator spectra and region check")
    common(sp)
    sp.add_argument("--sweep", type=int, nargs="*", default=None)
    sp.set_defaults(func=cmd_stability)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
