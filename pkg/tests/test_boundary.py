import numpy as np
import pytest

from splinedq.basis import extended, trigonometric
from splinedq.benchmarks import problem1, problem2
from splinedq.boundary import (DegenerateBoundaryError, Dirichlet, Neumann,
                               apply_dirichlet, dirichlet_spec,
                               eliminate_neumann_x, eliminate_neumann_y,
                               fill_boundary, neumann_spec)
from splinedq.grid import make_grid
from splinedq.weights import WeightSet, build_weight_set


def zero(s, t):
    return np.zeros_like(s)


def test_apply_dirichlet_zero_data():
    g = make_grid(0, 1, 0, 1, 6, 6)
    U = np.full((6, 6), 7.0)
    spec = dirichlet_spec(zero, zero, zero, zero)
    apply_dirichlet(spec, g, 0.0, U)
    assert np.all(U[0, :] == 0) and np.all(U[-1, :] == 0)
    assert np.all(U[:, 0] == 0) and np.all(U[:, -1] == 0)
    assert np.all(U[1:-1, 1:-1] == 7.0)


def test_apply_dirichlet_gaussian_pulse_trace():
    p = problem1(alpha_x=0.05, alpha_y=0.05, domain=(0.0, 1.0, 0.0, 1.0))
    g = make_grid(0, 1, 0, 1, 9, 9)
    U = np.zeros((9, 9))
    apply_dirichlet(p.boundary, g, 0.0, U)
    # edge values are the pulse; the pulse is 1 at its center (0.5, 0.5)
    expect = np.exp(-(g.y - 0.5) ** 2 / 0.05 - (0.0 - 0.5) ** 2 / 0.05)
    assert np.allclose(U[0, :], expect, rtol=1e-14)


def test_apply_dirichlet_constant_consistency():
    g = make_grid(0, 1, 0, 1, 5, 5)
    c = 3.25

    def fc(s, t):
        return np.full_like(s, c)

    U = np.full((5, 5), c)
    before = U.copy()
    spec = dirichlet_spec(fc, fc, fc, fc)
    apply_dirichlet(spec, g, 0.3, U)
    assert np.array_equal(U, before)


def test_apply_dirichlet_idempotent():
    p = problem1()
    g = make_grid(1, 2, 1, 2, 7, 7)
    U = np.random.default_rng(0).normal(size=(7, 7))
    apply_dirichlet(p.boundary, g, 0.7, U)
    once = U.copy()
    apply_dirichlet(p.boundary, g, 0.7, U)
    assert np.array_equal(U, once)


def _neumann_ws(N=41):
    return build_weight_set(extended(0.0), make_grid(0, 1, 0, 1, N, N))


def test_neumann_zero_data_zero_interior():
    ws = _neumann_ws(11)
    spec = neumann_spec(zero, zero, zero, zero)
    U = np.zeros((11, 11))
    lo, hi = eliminate_neumann_x(spec, ws, 0.0, U)
    assert np.allclose(lo, 0) and np.allclose(hi, 0)
    lo, hi = eliminate_neumann_y(spec, ws, 0.0, U)
    assert np.allclose(lo, 0) and np.allclose(hi, 0)


def test_neumann_recovers_linear_field_x():
    ws = _neumann_ws()
    g = ws.grid
    X, _ = np.meshgrid(g.x, g.y, indexing="ij")
    U = X.copy()
    U[0, :] = U[-1, :] = 0.0    # forget the edges

    def one(s, t):
        return np.ones_like(s)

    spec = neumann_spec(one, one, zero, zero)
    lo, hi = eliminate_neumann_x(spec, ws, 0.0, U)
    assert np.abs(lo - g.a).max() <= 1e-8
    assert np.abs(hi - g.b).max() <= 1e-8


def test_neumann_recovers_linear_field_y():
    ws = _neumann_ws()
    g = ws.grid
    _, Y = np.meshgrid(g.x, g.y, indexing="ij")
    U = 2.0 * Y + 0.5
    U[:, 0] = U[:, -1] = 0.0

    def two(s, t):
        return np.full_like(s, 2.0)

    spec = neumann_spec(zero, zero, two, two)
    lo, hi = eliminate_neumann_y(spec, ws, 0.0, U)
    assert np.abs(lo - (2.0 * g.c + 0.5)).max() <= 1e-8
    assert np.abs(hi - (2.0 * g.d + 0.5)).max() <= 1e-8


@pytest.mark.parametrize("coef", [(1.0, 0.0, 0.0), (0.0, 1.0, 2.0), (0.7, -1.3, 0.4)])
def test_neumann_polynomial_degree_one_property(coef):
    ax, ay, c0 = coef
    ws = _neumann_ws()
    g = ws.grid
    X, Y = np.meshgrid(g.x, g.y, indexing="ij")
    exact = ax * X + ay * Y + c0
    U = exact.copy()
    U[0, :] = U[-1, :] = U[:, 0] = U[:, -1] = 0.0

    spec = neumann_spec(lambda s, t: np.full_like(s, ax),
                        lambda s, t: np.full_like(s, ax),
                        lambda s, t: np.full_like(s, ay),
                        lambda s, t: np.full_like(s, ay))
    fill_boundary(spec, ws, 0.0, U)
    assert np.abs(U - exact).max() <= 1e-8


def test_neumann_exact_problem2_field():
    # exact field plus its exact derivative data recovers the boundary to
    # discretization accuracy
    p = problem2(alpha=0.1, beta=1.0, bc_kind="neumann")
    ws = _neumann_ws(41)
    g = ws.grid
    X, Y = np.meshgrid(g.x, g.y, indexing="ij")
    exact = p.exact(X, Y, 0.0)
    U = exact.copy()
    U[0, :] = U[-1, :] = U[:, 0] = U[:, -1] = 0.0
    fill_boundary(p.boundary, ws, 0.0, U)
    scale = np.abs(exact).max()
    assert np.abs(U - exact).max() <= 2e-4 * scale


def test_mixed_pair_dirichlet_and_neumann():
    ws = _neumann_ws()
    g = ws.grid
    X, _ = np.meshgrid(g.x, g.y, indexing="ij")
    exact = 3.0 * X + 1.0
    U = exact.copy()
    U[0, :] = U[-1, :] = 0.0
    spec = dirichlet_spec(lambda y, t: np.full_like(y, 1.0), zero, zero, zero)
    spec = type(spec)(spec.x_lo,
                      Neumann(lambda y, t: np.full_like(y, 3.0)),
                      Dirichlet(lambda x, t: 3.0 * x + 1.0),
                      Dirichlet(lambda x, t: 3.0 * x + 1.0))
    fill_boundary(spec, ws, 0.0, U)
    assert np.abs(U - exact).max() <= 1e-8


def test_degenerate_elimination_detected():
    g = make_grid(0, 1, 0, 1, 5, 5)
    M = np.zeros((5, 5))
    M[0, 0] = M[0, -1] = 1.0
    M[-1, 0] = M[-1, -1] = 1.0     # rank-1 corner block
    ws = WeightSet(A1=M, A2=M, B1=M, B2=M, basis=extended(0.0), grid=g)
    spec = neumann_spec(zero, zero, zero, zero)
    with pytest.raises(DegenerateBoundaryError):
        eliminate_neumann_x(spec, ws, 0.0, np.zeros((5, 5)))


def test_fill_boundary_dirichlet_matches_apply():
    p = problem1()
    ws = build_weight_set(trigonometric(), make_grid(1, 2, 1, 2, 9, 9))
    U1 = np.zeros((9, 9))
    U2 = np.zeros((9, 9))
    fill_boundary(p.boundary, ws, 0.4, U1)
    apply_dirichlet(p.boundary, ws.grid, 0.4, U2)
    assert np.array_equal(U1, U2)
