import numpy as np
import pytest

from splinedq.basis import extended, trigonometric
from splinedq.benchmarks import problem1
from splinedq.boundary import dirichlet_spec
from splinedq.grid import make_grid
from splinedq.operator import PDECoefficients, assemble_operator
from splinedq.stability import (check_matrix_stability, check_stability,
                                spectrum, write_spectrum_csv)
from splinedq.integrator import stability_function
from splinedq.weights import build_weight_set


def test_spectrum_diagonal():
    ev = np.sort(spectrum(np.diag([1.0, 2.0, 3.0])).real)
    assert np.allclose(ev, [1, 2, 3])


def test_spectrum_rotation_matrix():
    ev = spectrum(np.array([[0.0, 1.0], [-1.0, 0.0]]))
    assert sorted(np.round(ev.imag, 12)) == [-1.0, 1.0]
    assert np.abs(ev.real).max() <= 1e-14


def test_spectrum_rejects_nonsquare_and_oversize():
    with pytest.raises(ValueError):
        spectrum(np.zeros((3, 4)))
    with pytest.raises(ValueError):
        spectrum(np.zeros((2026, 2026)))


def test_spectrum_trace_consistency():
    rng = np.random.default_rng(2)
    M = rng.normal(size=(40, 40))
    ev = spectrum(M)
    assert abs(ev.sum().real - np.trace(M)) <= 1e-8 * max(1.0, abs(np.trace(M)))
    assert abs(ev.sum().imag) <= 1e-8


def test_stability_function_at_origin():
    assert abs(stability_function(0.0) - 1.0) <= 1e-12


def test_stability_function_taylor_coefficients():
    # degree-5 polynomial: recover coefficients exactly from 6 roots of unity
    zs = np.exp(2j * np.pi * np.arange(6) / 6)
    vals = np.array([stability_function(z) for z in zs])
    coeffs = np.fft.fft(vals) / 6            # c_m = (1/6) sum R(z_k) z_k^{-m}
    expect = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0]
    for m, e in enumerate(expect):
        assert abs(coeffs[m] - e) <= 1e-12, f"z^{m} coefficient"


def test_stability_function_negative_axis_near_origin():
    assert abs(stability_function(-1.0)) < 1.0


def test_check_stability_negative_identity():
    rep = check_matrix_stability(-np.eye(5), 0.1)
    assert rep.all_in_region and rep.max_real_part == pytest.approx(-1.0)


def test_check_stability_flags_positive_eigenvalue():
    B = np.diag([1.0, -2.0])
    rep = check_matrix_stability(B, 0.5)
    assert rep.max_real_part == pytest.approx(1.0)
    assert not rep.all_in_region


def test_pure_diffusion_spectrum_nearly_real():
    ws = build_weight_set(extended(0.0), make_grid(0, 1, 0, 1, 13, 13))
    zero = lambda s, t: np.zeros_like(s)
    bc = dirichlet_spec(zero, zero, zero, zero)
    system = assemble_operator(PDECoefficients(1.0, 1.0, 0.0, 0.0), ws, bc)
    ev = spectrum(system.dense_operator())
    rad = np.abs(ev).max()
    assert np.abs(ev.imag).max() <= 1e-6 * rad


def test_problem1_operator_spectrum_in_left_half_plane():
    p = problem1(alpha_x=0.05, alpha_y=0.05)
    ws = build_weight_set(extended(0.0), make_grid(1, 2, 1, 2, 11, 11))
    system = assemble_operator(p.coeffs, ws, p.boundary)
    rep = check_stability(system, dt=ws.grid.hx ** 2)
    assert rep.max_real_part <= 0.0
    assert rep.all_in_region
    assert rep.n == 81


def test_spectrum_csv_export(tmp_path):
    rep = check_matrix_stability(-np.eye(3), 0.2, label="toy")
    path = tmp_path / "spec.csv"
    write_spectrum_csv(rep, str(path), grid_label="3x3", basis_label="toy")
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "re,im,grid,basis"
    assert len(lines) == 4
