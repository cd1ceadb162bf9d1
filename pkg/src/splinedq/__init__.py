"""Spline differential-quadrature solvers for 2D unsteady convection-diffusion.

Space is discretized by differential quadrature with modified trigonometric,
exponential, or extended cubic spline bases on uniform tensor grids; time by
the optimal five-stage fourth-order SSP Runge-Kutta scheme.  Built-in matrix
stability analysis and the benchmark problems used to validate the solver are
included, together with a batch CLI (`splinedq`).
"""

from .basis import BasisFamily, KnotStencil, exponential, extended, trigonometric
from .benchmarks import (BenchmarkProblem, ErrorReport, error_norms, problem1,
                         problem2, problem3, roc, run_experiment, run_sweep,
                         table_norms)
from .boundary import (BoundarySpec, Dirichlet, Neumann, dirichlet_spec,
                       neumann_spec)
from .grid import Grid2D, interior_linear_index, make_grid
from .integrator import (DivergenceError, SspRk54Tableau, derive_stage_times,
                         integrate, stability_function, step)
from .operator import PDECoefficients, SemiDiscreteSystem, assemble_operator
from .stability import SpectrumReport, check_stability, spectrum
from .weights import (SingularSystemError, TridiagonalSystem, WeightSet,
                      build_weight_set, first_order_weights, shu_recursion,
                      thomas_solve)

__all__ = [
    "BasisFamily", "KnotStencil", "trigonometric", "exponential", "extended",
    "Grid2D", "make_grid", "interior_linear_index",
    "TridiagonalSystem", "WeightSet", "SingularSystemError",
    "thomas_solve", "first_order_weights", "shu_recursion", "build_weight_set",
    "BoundarySpec", "Dirichlet", "Neumann", "dirichlet_spec", "neumann_spec",
    "PDECoefficients", "SemiDiscreteSystem", "assemble_operator",
    "SspRk54Tableau", "derive_stage_times", "step", "integrate",
    "stability_function", "DivergenceError",
    "SpectrumReport", "spectrum", "check_stability",
    "BenchmarkProblem", "ErrorReport", "problem1", "problem2", "problem3",
    "error_norms", "table_norms", "roc", "run_experiment", "run_sweep",
]

__version__ = "0.1.0"
