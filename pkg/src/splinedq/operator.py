"""Semi-discrete system dU/dt = B U + F over the interior nodes.

The right-hand side is evaluated matrix-free on the full field (two dense
matmuls per call); the dense interior operator B is materialized only for
grids small enough for the eigenvalue analysis.
"""

from dataclasses import dataclass, field

import numpy as np

from .boundary import BoundarySpec, fill_boundary
from .grid import Grid2D
from .weights import WeightSet

DENSE_INTERIOR_CAP = 45 * 45    # largest interior dimension stored densely


@dataclass(frozen=True)
class PDECoefficients:
    """Diffusion (alpha, > 0) and convection (beta) coefficients per direction."""

    alpha_x: float
    alpha_y: float
    beta_x: float
    beta_y: float

    def __post_init__(self):
        # zero diffusion is tolerated so the degenerate all-zero operator is
        # representable; negative diffusion is rejected outright
        if self.alpha_x < 0 or self.alpha_y < 0:
            raise ValueError(
                f"diffusion coefficients must be nonnegative, got "
                f"alpha_x={self.alpha_x}, alpha_y={self.alpha_y}")


@dataclass(frozen=True)
class SemiDiscreteSystem:
    """Interior-node ODE system with a boundary-update closure.

    ``Cx = alpha_x A2 - beta_x A1`` and ``Cy = alpha_y B2 - beta_y B1`` combine
    each direction's weights once; rhs applies them to the boundary-completed
    full field, which equals B U + F with B the interior restriction and F the
    boundary-column contributions.
    """

    coeffs: PDECoefficients
    weights: WeightSet
    grid: Grid2D
    bc: BoundarySpec
    Cx: np.ndarray = field(repr=False)
    Cy: np.ndarray = field(repr=False)
    B: np.ndarray | None = field(repr=False)

    @property
    def n_interior(self) -> int:
        return self.grid.n_interior

    def scatter(self, u_int: np.ndarray) -> np.ndarray:
        """Interior vector (x-major then y) -> full field with a zero ring."""
        g = self.grid
        U = np.zeros((g.Nx, g.Ny))
        U[1:-1, 1:-1] = u_int.reshape(g.Nx - 2, g.Ny - 2)
        return U

    def gather(self, U: np.ndarray) -> np.ndarray:
        return U[1:-1, 1:-1].ravel()

    def full_field(self, u_int: np.ndarray, t: float) -> np.ndarray:
        """Interior vector plus boundary values at time t."""
        U = self.scatter(u_int)
        fill_boundary(self.bc, self.weights, t, U)
        return U

    def rhs(self, t: float, u_int: np.ndarray) -> np.ndarray:
        """L(U) = B U + F(t, U) evaluated through the full field."""
        U = self.full_field(u_int, t)
        dU = self.Cx @ U + U @ self.Cy.T
        return dU[1:-1, 1:-1].ravel()

    def boundary_vector(self, t: float, u_int: np.ndarray) -> np.ndarray:
        """F(t, U): boundary-column contributions to each interior equation."""
        U = self.full_field(u_int, t)
        Fx = np.outer(self.Cx[1:-1, 0], U[0, 1:-1]) + np.outer(self.Cx[1:-1, -1], U[-1, 1:-1])
        Fy = U[1:-1, 0][:, None] * self.Cy[1:-1, 0][None, :] \
            + U[1:-1, -1][:, None] * self.Cy[1:-1, -1][None, :]
        return (Fx + Fy).ravel()

    def dense_operator(self) -> np.ndarray:
        """Dense interior matrix B; refuses above the configured cap."""
        if self.B is None:
            raise ValueError(
                f"dense operator unavailable: interior dimension "
                f"{self.n_interior} exceeds cap {DENSE_INTERIOR_CAP}; shrink the grid")
        return self.B


def assemble_operator(coeffs: PDECoefficients, weights: WeightSet,
                      bc: BoundarySpec) -> SemiDiscreteSystem:
    """Combine weight matrices with PDE coefficients into the interior system."""
    grid = weights.grid
    Cx = coeffs.alpha_x * weights.A2 - coeffs.beta_x * weights.A1
    Cy = coeffs.alpha_y * weights.B2 - coeffs.beta_y * weights.B1
    B = None
    if grid.n_interior <= DENSE_INTERIOR_CAP:
        Ix = np.eye(grid.Nx - 2)
        Iy = np.eye(grid.Ny - 2)
        B = np.kron(Cx[1:-1, 1:-1], Iy) + np.kron(Ix, Cy[1:-1, 1:-1])
    return SemiDiscreteSystem(coeffs=coeffs, weights=weights, grid=grid, bc=bc,
                              Cx=Cx, Cy=Cy, B=B)


def dump_operator_csv(system: SemiDiscreteSystem, path: str) -> None:
    """Dense-operator dump for offline inspection."""
    B = system.dense_operator()
    with open(path, "w") as f:
        for row in B:
            f.write(",".join(f"{v:.17g}" for v in row) + "\n")
