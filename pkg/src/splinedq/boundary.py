"""Boundary data and per-stage boundary-value computation.

Dirichlet edges read their data directly.  Neumann edges couple the two edge
values of each grid line through the first-derivative weight rows; the 2x2
elimination below recovers them from the prescribed normal derivatives and the
current interior field, so it runs inside every right-hand-side evaluation.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import Grid2D
from .weights import WeightSet

EdgeFunc = Callable[[np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class Dirichlet:
    f: EdgeFunc     # (edge coordinate array, t) -> values


@dataclass(frozen=True)
class Neumann:
    g: EdgeFunc     # (edge coordinate array, t) -> axis derivative at the edge


@dataclass(frozen=True)
class BoundarySpec:
    """Conditions on the four edges x=a, x=b, y=c, y=d."""

    x_lo: Dirichlet | Neumann
    x_hi: Dirichlet | Neumann
    y_lo: Dirichlet | Neumann
    y_hi: Dirichlet | Neumann

    def all_dirichlet(self) -> bool:
        return all(isinstance(e, Dirichlet)
                   for e in (self.x_lo, self.x_hi, self.y_lo, self.y_hi))


class DegenerateBoundaryError(Exception):
    """Singular 2x2 system in the Neumann elimination."""


def dirichlet_spec(f1: EdgeFunc, f2: EdgeFunc, f3: EdgeFunc, f4: EdgeFunc) -> BoundarySpec:
    return BoundarySpec(Dirichlet(f1), Dirichlet(f2), Dirichlet(f3), Dirichlet(f4))


def neumann_spec(g1: EdgeFunc, g2: EdgeFunc, g3: EdgeFunc, g4: EdgeFunc) -> BoundarySpec:
    return BoundarySpec(Neumann(g1), Neumann(g2), Neumann(g3), Neumann(g4))


def apply_dirichlet(spec: BoundarySpec, grid: Grid2D, t: float, U: np.ndarray) -> np.ndarray:
    """Write Dirichlet edge values into the full field at time t.

    x-edges first, y-edges second, so y-data wins the corner nodes when all
    four edges are Dirichlet; interior values are untouched.
    """
    if isinstance(spec.x_lo, Dirichlet):
        U[0, :] = spec.x_lo.f(grid.y, t)
    if isinstance(spec.x_hi, Dirichlet):
        U[-1, :] = spec.x_hi.f(grid.y, t)
    if isinstance(spec.y_lo, Dirichlet):
        U[:, 0] = spec.y_lo.f(grid.x, t)
    if isinstance(spec.y_hi, Dirichlet):
        U[:, -1] = spec.y_hi.f(grid.x, t)
    return U


def _eliminate_pair(row_lo: np.ndarray, row_hi: np.ndarray,
                    S_lo: np.ndarray, S_hi: np.ndarray):
    """Solve the 2x2 edge system  [[a11, a1N], [aN1, aNN]] (u_lo, u_hi) = (S_lo, S_hi)."""
    a11, a1N = row_lo[0], row_lo[-1]
    aN1, aNN = row_hi[0], row_hi[-1]
    det = a11 * aNN - aN1 * a1N
    if det == 0.0:
        raise DegenerateBoundaryError("singular 2x2 system in Neumann elimination")
    u_lo = (S_lo * aNN - S_hi * a1N) / det
    u_hi = (S_hi * a11 - S_lo * aN1) / det
    return u_lo, u_hi


def eliminate_neumann_x(spec: BoundarySpec, weights: WeightSet, t: float,
                        U: np.ndarray):
    """Edge values u_{1j}, u_{Nx j} for all j from the x-direction Neumann data.

    S_j^a = g1(y_j,t) - sum_{k=2}^{Nx-1} a^(1)_{1k} u_{kj}, analogously S_j^b;
    the interior sums use the field as passed in.
    """
    grid = weights.grid
    A1 = weights.A1
    Sa = spec.x_lo.g(grid.y, t) - A1[0, 1:-1] @ U[1:-1, :]
    Sb = spec.x_hi.g(grid.y, t) - A1[-1, 1:-1] @ U[1:-1, :]
    return _eliminate_pair(A1[0], A1[-1], Sa, Sb)


def eliminate_neumann_y(spec: BoundarySpec, weights: WeightSet, t: float,
                        U: np.ndarray):
    """Mirror of the x-elimination with the y-direction weight rows."""
    grid = weights.grid
    B1 = weights.B1
    Sc = spec.y_lo.g(grid.x, t) - U[:, 1:-1] @ B1[0, 1:-1]
    Sd = spec.y_hi.g(grid.x, t) - U[:, 1:-1] @ B1[-1, 1:-1]
    return _eliminate_pair(B1[0], B1[-1], Sc, Sd)


def _edge_pivot(value, where):
    if value == 0.0:
        raise DegenerateBoundaryError(f"zero derivative-row pivot at the {where} edge")
    return value


def _mixed_pair_x(spec, weights, t, U):
    # one x-edge Dirichlet (already written), the other Neumann: 1x1 solve
    grid = weights.grid
    A1 = weights.A1
    if isinstance(spec.x_lo, Neumann):
        S = spec.x_lo.g(grid.y, t) - A1[0, 1:-1] @ U[1:-1, :] - A1[0, -1] * U[-1, :]
        U[0, :] = S / _edge_pivot(A1[0, 0], "x=a")
    if isinstance(spec.x_hi, Neumann):
        S = spec.x_hi.g(grid.y, t) - A1[-1, 1:-1] @ U[1:-1, :] - A1[-1, 0] * U[0, :]
        U[-1, :] = S / _edge_pivot(A1[-1, -1], "x=b")


def _mixed_pair_y(spec, weights, t, U):
    grid = weights.grid
    B1 = weights.B1
    if isinstance(spec.y_lo, Neumann):
        S = spec.y_lo.g(grid.x, t) - U[:, 1:-1] @ B1[0, 1:-1] - B1[0, -1] * U[:, -1]
        U[:, 0] = S / _edge_pivot(B1[0, 0], "y=c")
    if isinstance(spec.y_hi, Neumann):
        S = spec.y_hi.g(grid.x, t) - U[:, 1:-1] @ B1[-1, 1:-1] - B1[-1, 0] * U[:, 0]
        U[:, -1] = S / _edge_pivot(B1[-1, -1], "y=d")


def fill_boundary(spec: BoundarySpec, weights: WeightSet, t: float,
                  U: np.ndarray) -> np.ndarray:
    """Compute the whole boundary ring of a full field at time t.

    Dirichlet edges are written first; Neumann pairs are eliminated x-direction
    first, then y (the y-elimination sums read the fresh x-edge values, and
    writes the corner nodes of Neumann y-edges).
    """
    apply_dirichlet(spec, weights.grid, t, U)
    x_lo_n = isinstance(spec.x_lo, Neumann)
    x_hi_n = isinstance(spec.x_hi, Neumann)
    y_lo_n = isinstance(spec.y_lo, Neumann)
    y_hi_n = isinstance(spec.y_hi, Neumann)
    if x_lo_n and x_hi_n:
        U[0, :], U[-1, :] = eliminate_neumann_x(spec, weights, t, U)
    elif x_lo_n or x_hi_n:
        _mixed_pair_x(spec, weights, t, U)
    if y_lo_n and y_hi_n:
        U[:, 0], U[:, -1] = eliminate_neumann_y(spec, weights, t, U)
    elif y_lo_n or y_hi_n:
        _mixed_pair_y(spec, weights, t, U)
    return U
