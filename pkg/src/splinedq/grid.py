"""Uniform tensor-product grid over a rectangle with 1-based node indexing."""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Grid2D:
    """Uniform partition of [a,b] x [c,d] with Nx, Ny nodes per direction.

    Node coordinates follow the 1-based convention x_1 = a, x_Nx = b used in
    all documented index contracts; the stored arrays are plain 0-based numpy
    arrays (x[0] == x_1).
    """

    a: float
    b: float
    c: float
    d: float
    Nx: int
    Ny: int
    hx: float = field(init=False)
    hy: float = field(init=False)
    x: np.ndarray = field(init=False, repr=False)
    y: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "hx", (self.b - self.a) / (self.Nx - 1))
        object.__setattr__(self, "hy", (self.d - self.c) / (self.Ny - 1))
        object.__setattr__(self, "x", np.linspace(self.a, self.b, self.Nx))
        object.__setattr__(self, "y", np.linspace(self.c, self.d, self.Ny))
        self.x.setflags(write=False)
        self.y.setflags(write=False)

    @property
    def n_interior(self) -> int:
        return (self.Nx - 2) * (self.Ny - 2)


def make_grid(a: float, b: float, c: float, d: float, Nx: int, Ny: int) -> Grid2D:
    """Build a uniform Grid2D; bounds must increase and Nx, Ny >= 4."""
    if not (b > a and d > c):
        raise ValueError(f"invalid domain bounds: [{a}, {b}] x [{c}, {d}]")
    if Nx < 4 or Ny < 4:
        raise ValueError(f"need at least 4 nodes per direction, got Nx={Nx}, Ny={Ny}")
    return Grid2D(float(a), float(b), float(c), float(d), int(Nx), int(Ny))


def interior_linear_index(i: int, j: int, grid: Grid2D) -> int:
    """Flat index of interior node (i, j), 1-based, x-major then y.

    The ordering matches the solution vector layout
    (u_22, u_23, ..., u_2(Ny-1), u_32, ...).
    """
    if not (2 <= i <= grid.Nx - 1):
        raise IndexError(f"i={i} is not an interior index (2..{grid.Nx - 1})")
    if not (2 <= j <= grid.Ny - 1):
        raise IndexError(f"j={j} is not an interior index (2..{grid.Ny - 1})")
    return (i - 2) * (grid.Ny - 2) + (j - 2)
