"""Benchmark problems, error norms, convergence rates and experiment driver."""

import json
import time
from dataclasses import asdict, dataclass, replace
from typing import Callable

import numpy as np

from .basis import BasisFamily
from .boundary import BoundarySpec, dirichlet_spec, neumann_spec
from .grid import make_grid
from .integrator import DivergenceError, integrate
from .operator import PDECoefficients, assemble_operator
from .weights import build_weight_set


@dataclass(frozen=True)
class BenchmarkProblem:
    name: str
    domain: tuple          # (a, b, c, d)
    coeffs: PDECoefficients
    initial: Callable      # (X, Y) -> field
    boundary: BoundarySpec
    exact: Callable | None = None   # (X, Y, t) -> field, when known


def problem1(alpha_x=0.05, alpha_y=0.05, beta_x=0.8, beta_y=0.8,
             domain=(1.0, 2.0, 1.0, 2.0), x0=0.5, y0=0.5) -> BenchmarkProblem:
    """Advected Gaussian pulse with unit height centered at (x0, y0).

    The pulse spreads as 1/(1+4t) and drifts with the convection velocities;
    Dirichlet data is traced from the closed form on all four edges.
    """
    if alpha_x <= 0 or alpha_y <= 0:
        raise ValueError("problem 1 needs positive diffusion coefficients")

    def exact(X, Y, t):
        s = 1.0 + 4.0 * t
        return np.exp(-(X - x0 - beta_x * t) ** 2 / (alpha_x * s)
                      - (Y - y0 - beta_y * t) ** 2 / (alpha_y * s)) / s

    a, b, c, d = domain
    bc = dirichlet_spec(
        lambda y, t: exact(a, y, t),
        lambda y, t: exact(b, y, t),
        lambda x, t: exact(x, c, t),
        lambda x, t: exact(x, d, t),
    )
    return BenchmarkProblem(
        name="problem1",
        domain=domain,
        coeffs=PDECoefficients(alpha_x, alpha_y, beta_x, beta_y),
        initial=lambda X, Y: exact(X, Y, 0.0),
        boundary=bc,
        exact=exact,
    )


def decay_rate(alpha: float, beta: float, b: float) -> float:
    """Positive root c of alpha c^2 + beta c - b = 0 (exponential profile rate)."""
    disc = beta * beta + 4.0 * b * alpha
    if disc < 0:
        raise ValueError(f"no real profile rate for alpha={alpha}, beta={beta}, b={b}")
    c_plus = (-beta + np.sqrt(disc)) / (2.0 * alpha)
    if c_plus <= 0:
        raise ValueError(
            f"no positive profile rate for alpha={alpha}, beta={beta}, b={b}")
    return c_plus


def problem2(alpha=0.1, beta=1.0, a=1.0, b=0.1, bc_kind="dirichlet",
             domain=(0.0, 1.0, 0.0, 1.0)) -> BenchmarkProblem:
    """Separable exponential profile a e^{bt} (e^{-cx x} + e^{-cy y}).

    The rates cx, cy take the positive quadratic root.  Boundary data of either
    kind is the analytic trace (value or axis derivative) of the closed form on
    the actual domain edges.  The profile constants a, b are configuration, not
    benchmark-pinned values.
    """
    cx = decay_rate(alpha, beta, b)
    cy = cx
    xa, xb, yc, yd = domain

    def exact(X, Y, t):
        return a * np.exp(b * t) * (np.exp(-cx * X) + np.exp(-cy * Y))

    if bc_kind == "dirichlet":
        bc = dirichlet_spec(
            lambda y, t: exact(xa, y, t),
            lambda y, t: exact(xb, y, t),
            lambda x, t: exact(x, yc, t),
            lambda x, t: exact(x, yd, t),
        )
    elif bc_kind == "neumann":
        def dudx(x_edge):
            return lambda y, t: -a * cx * np.exp(b * t - cx * x_edge) * np.ones_like(y)

        def dudy(y_edge):
            return lambda x, t: -a * cy * np.exp(b * t - cy * y_edge) * np.ones_like(x)

        bc = neumann_spec(dudx(xa), dudx(xb), dudy(yc), dudy(yd))
    else:
        raise ValueError(f"bc_kind must be 'dirichlet' or 'neumann', got {bc_kind!r}")

    return BenchmarkProblem(
        name=f"problem2-{bc_kind}",
        domain=domain,
        coeffs=PDECoefficients(alpha, alpha, beta, beta),
        initial=lambda X, Y: exact(X, Y, 0.0),
        boundary=bc,
        exact=exact,
    )


def four_peak_field(X, Y):
    """Sum of four Gaussian-type humps used as the rough initial condition."""
    return (5.0 * np.exp(-(9 * X - 2) ** 2 / 4 - (9 * Y - 2) ** 2 / 4)
            + 7.0 * np.exp(-(9 * X + 1) ** 2 / 50 - (9 * Y + 1) / 10)
            + 4.0 * np.exp(-(9 * X - 7) ** 2 / 4 - (9 * Y - 3) ** 2 / 4)
            - 2.0 * np.exp(-(9 * X - 4) ** 2 - (9 * Y - 7) ** 2))


def problem3(cbar=0.0) -> BenchmarkProblem:
    """Four-hump initial field on the unit square, no closed-form solution.

    Dirichlet data is the initial trace decreased linearly in time at rate
    cbar (default 0: time-constant edges).
    """
    def f_edge(fix_x=None, fix_y=None):
        def f(s, t):
            X = np.full_like(s, fix_x) if fix_x is not None else s
            Y = np.full_like(s, fix_y) if fix_y is not None else s
            return four_peak_field(X, Y) - cbar * t
        return f

    bc = dirichlet_spec(f_edge(fix_x=0.0), f_edge(fix_x=1.0),
                        f_edge(fix_y=0.0), f_edge(fix_y=1.0))
    return BenchmarkProblem(
        name="problem3",
        domain=(0.0, 1.0, 0.0, 1.0),
        coeffs=PDECoefficients(0.2, 0.3, -0.1, 0.2),
        initial=four_peak_field,
        boundary=bc,
        exact=None,
    )


def error_norms(numeric: np.ndarray, exact: np.ndarray):
    """(max abs, root-mean-square) of the interior error of two full fields."""
    if numeric.shape != exact.shape:
        raise ValueError(f"shape mismatch: {numeric.shape} vs {exact.shape}")
    e = (numeric - exact)[1:-1, 1:-1]
    linf = float(np.abs(e).max())
    l2 = float(np.sqrt((e * e).mean()))
    return linf, l2


def table_norms(numeric: np.ndarray, exact: np.ndarray):
    """(sum of squared errors, mean squared error) over interior nodes.

    These are the statistics the reference tables actually print in their
    max-error and average-error columns (see the report module); they equal
    the squares of the unnormalized and normalized discrete 2-norms.
    """
    if numeric.shape != exact.shape:
        raise ValueError(f"shape mismatch: {numeric.shape} vs {exact.shape}")
    e = (numeric - exact)[1:-1, 1:-1]
    sse = float((e * e).sum())
    return sse, sse / e.size


def roc(err_coarse: float, err_fine: float, rho: float) -> float:
    """Observed convergence order log(E_c/E_f)/log(rho) for refinement rho > 1."""
    if err_coarse <= 0 or err_fine <= 0:
        raise ValueError("convergence order undefined for non-positive errors")
    if rho <= 1:
        raise ValueError(f"refinement factor must exceed 1, got {rho}")
    return float(np.log(err_coarse / err_fine) / np.log(rho))


@dataclass(frozen=True)
class ErrorReport:
    problem: str
    basis_label: str
    N: int
    h: float
    dt: float
    t_final: float
    linf: float | None
    l2: float | None
    sse: float | None       # table-units max-error statistic
    mse: float | None       # table-units average-error statistic
    seconds: float
    steps: int
    diverged: bool = False
    diverged_step: int | None = None
    roc_linf: float | None = None
    roc_l2: float | None = None

    def with_roc(self, prev: "ErrorReport") -> "ErrorReport":
        if prev is None or self.diverged or prev.diverged or self.linf is None:
            return self
        rho = self.N / prev.N
        return replace(self,
                       roc_linf=roc(prev.linf, self.linf, rho),
                       roc_l2=roc(prev.l2, self.l2, rho))


CSV_HEADER = "basis,lambda,p,N,h,dt,t_final,linf,l2,roc_linf,roc_l2,seconds"


def report_csv_row(r: ErrorReport) -> str:
    basis = r.basis_label.split("(")[0]
    lam = p = ""
    if "lambda=" in r.basis_label:
        lam = r.basis_label.split("lambda=")[1].rstrip(")")
    if "(p=" in r.basis_label:
        p = r.basis_label.split("(p=")[1].rstrip(")")

    def fmt(v):
        return "" if v is None else f"{v:.6g}"

    return ",".join([basis, lam, p, str(r.N), f"{r.h:.6g}", f"{r.dt:.6g}",
                     f"{r.t_final:.6g}", fmt(r.linf), fmt(r.l2),
                     fmt(r.roc_linf), fmt(r.roc_l2), f"{r.seconds:.3f}"])


def reports_json(reports) -> str:
    """Deterministic JSON array of one or more reports (sorted keys)."""
    if isinstance(reports, ErrorReport):
        reports = [reports]
    return json.dumps([asdict(r) for r in reports], sort_keys=True, indent=2)


def run_experiment(problem: BenchmarkProblem, basis: BasisFamily, N: int,
                   dt: float, t_final: float,
                   field_callback=None) -> ErrorReport:
    """Grid -> weights -> operator -> integrate -> error norms.

    A divergence is recorded in the report (not raised) so sweeps continue.
    ``field_callback(t, full_field)`` runs after every step when given.
    """
    a, b, c, d = problem.domain
    grid = make_grid(a, b, c, d, N, N)
    ws = build_weight_set(basis, grid)
    system = assemble_operator(problem.coeffs, ws, problem.boundary)

    X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
    u0 = problem.initial(X, Y)[1:-1, 1:-1].ravel()

    cb = None
    if field_callback is not None:
        def cb(_m, t, u):
            field_callback(t, system.full_field(u, t))

    start = time.perf_counter()
    try:
        u, t_reached, steps = integrate(system.rhs, u0, 0.0, t_final, dt, callback=cb)
        diverged, dstep = False, None
    except DivergenceError as exc:
        u, t_reached, steps = None, None, exc.step
        diverged, dstep = True, exc.step
    seconds = time.perf_counter() - start

    linf = l2 = sse = mse = None
    if not diverged and problem.exact is not None:
        U = system.full_field(u, t_reached)
        E = problem.exact(X, Y, t_reached)
        linf, l2 = error_norms(U, E)
        sse, mse = table_norms(U, E)
    return ErrorReport(
        problem=problem.name, basis_label=basis.label(), N=N, h=grid.hx,
        dt=dt, t_final=t_final, linf=linf, l2=l2, sse=sse, mse=mse,
        seconds=seconds, steps=steps if steps is not None else 0,
        diverged=diverged, diverged_step=dstep)


def run_sweep(problem: BenchmarkProblem, basis: BasisFamily, Ns, dt_rule,
              t_final: float):
    """Run a grid sweep, attaching node-ratio convergence orders.

    ``dt_rule`` is either a fixed float or a callable h -> dt (e.g. h*h).
    """
    reports = []
    prev = None
    for N in Ns:
        h = (problem.domain[1] - problem.domain[0]) / (N - 1)
        dt = dt_rule(h) if callable(dt_rule) else dt_rule
        rep = run_experiment(problem, basis, N, dt, t_final)
        rep = rep.with_roc(prev)
        reports.append(rep)
        if not rep.diverged:
            prev = rep
    return reports


def write_field_dump(path: str, X, Y, U) -> None:
    """Plot-ready dump: `x y u` rows, one blank line between x-blocks."""
    with open(path, "w") as f:
        for i in range(X.shape[0]):
            for j in range(X.shape[1]):
                f.write(f"{X[i, j]:.9g} {Y[i, j]:.9g} {U[i, j]:.9g}\n")
            if i < X.shape[0] - 1:
                f.write("\n")
