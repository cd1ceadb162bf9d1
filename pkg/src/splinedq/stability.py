"""Matrix stability analysis of the semi-discrete operator.

The full spectrum of the dense interior operator is computed and every
dt-scaled eigenvalue is checked against the stepping scheme's amplification
factor; the scheme is probed through its own step routine, never through a
hard-coded polynomial.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .integrator import stability_function
from .operator import DENSE_INTERIOR_CAP, SemiDiscreteSystem

REGION_TOL = 1e-12      # |R(z)| <= 1 + REGION_TOL counts as inside


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    max_real_part: float
    dt: float
    all_in_region: bool
    worst_amplification: float
    n: int
    label: str = ""

    def stable(self) -> bool:
        return self.all_in_region


def spectrum(M: np.ndarray) -> np.ndarray:
    """Full spectrum of a dense real square matrix (conjugate pairs preserved)."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"need a square matrix, got shape {M.shape}")
    if M.shape[0] > DENSE_INTERIOR_CAP:
        raise ValueError(
            f"matrix dimension {M.shape[0]} exceeds the eigenvalue cap "
            f"{DENSE_INTERIOR_CAP}; shrink the grid")
    return np.linalg.eigvals(M)


def check_matrix_stability(B: np.ndarray, dt: float, label: str = "") -> SpectrumReport:
    """Spectrum of B plus membership of dt * lambda in the stability region."""
    ev = spectrum(B)
    amps = np.array([abs(stability_function(complex(lam) * dt)) for lam in ev])
    worst = float(amps.max())
    return SpectrumReport(
        eigenvalues=ev,
        max_real_part=float(ev.real.max()),
        dt=dt,
        all_in_region=bool(worst <= 1.0 + REGION_TOL),
        worst_amplification=worst,
        n=len(ev),
        label=label,
    )


def check_stability(system: SemiDiscreteSystem, dt: float, label: str = "") -> SpectrumReport:
    return check_matrix_stability(system.dense_operator(), dt, label=label)


def write_spectrum_csv(report: SpectrumReport, path: str, grid_label: str,
                       basis_label: str) -> None:
    """One row per eigenvalue: re, im, grid, basis."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["re", "im", "grid", "basis"])
        for lam in report.eigenvalues:
            w.writerow([f"{lam.real:.15g}", f"{lam.imag:.15g}", grid_label, basis_label])
