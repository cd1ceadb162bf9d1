"""Optimal five-stage fourth-order strong-stability-preserving Runge-Kutta.

The scheme is a sequence of convex combinations of forward-Euler-like
sub-steps; the fifteen printed constants are kept verbatim.  Stage abscissae
are not part of the published scheme, so they are derived by propagating the
stage formulas through du/dt = 1, u(0) = 0 (each stage value then equals its
own time offset); time-dependent boundary data is evaluated at those times.
"""

from dataclasses import dataclass

import numpy as np


class DivergenceError(Exception):
    """Non-finite state during time stepping (instability)."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class SspRk54Tableau:
    b10: float = 0.391752226571890

    a20: float = 0.444370493651235
    a21: float = 0.555629506348765
    b21: float = 0.368410593050371

    a30: float = 0.620101851488403
    a32: float = 0.379898148511597
    b32: float = 0.251891774271694

    a40: float = 0.178079954393132
    a43: float = 0.821920045606868
    b43: float = 0.544974750228521

    a52: float = 0.517231671970585
    a53: float = 0.096059710526147
    b53: float = 0.063692468666290
    a54: float = 0.386708617503269
    b54: float = 0.226007483236906

    def combination_weights(self):
        """State-combination weights of each stage (each set sums to 1)."""
        return ((1.0,),
                (self.a20, self.a21),
                (self.a30, self.a32),
                (self.a40, self.a43),
                (self.a52, self.a53, self.a54))


TABLEAU = SspRk54Tableau()


def derive_stage_times(tab: SspRk54Tableau = TABLEAU):
    """Stage abscissae c_1..c_5 via the du/dt = 1 propagation."""
    u0 = 0.0
    u1 = u0 + tab.b10
    u2 = tab.a20 * u0 + tab.a21 * u1 + tab.b21
    u3 = tab.a30 * u0 + tab.a32 * u2 + tab.b32
    u4 = tab.a40 * u0 + tab.a43 * u3 + tab.b43
    return (0.0, u1, u2, u3, u4)


_C = derive_stage_times()


def step(L, u, t, dt, tab: SspRk54Tableau = TABLEAU):
    """One SSP-RK54 step of du/dt = L(t, u) from (t, u) with step dt.

    L is called with the stage time for its second argument; the evaluation of
    L(u3) is shared between the fourth stage and the final combination.
    """
    k0 = L(t + _C[0] * dt, u)
    u1 = u + (tab.b10 * dt) * k0
    k1 = L(t + _C[1] * dt, u1)
    u2 = tab.a20 * u + tab.a21 * u1 + (tab.b21 * dt) * k1
    k2 = L(t + _C[2] * dt, u2)
    u3 = tab.a30 * u + tab.a32 * u2 + (tab.b32 * dt) * k2
    k3 = L(t + _C[3] * dt, u3)
    u4 = tab.a40 * u + tab.a43 * u3 + (tab.b43 * dt) * k3
    k4 = L(t + _C[4] * dt, u4)
    return (tab.a52 * u2 + tab.a53 * u3 + (tab.b53 * dt) * k3
            + tab.a54 * u4 + (tab.b54 * dt) * k4)


def integrate(L, u0, t0, t_end, dt, callback=None):
    """Advance from t0 to t_end with fixed steps of (approximately) dt.

    (t_end - t0)/dt must be within 1e-9 of an integer; dt is then nudged so the
    final step lands exactly on t_end.  Returns (state, reached time, steps).
    Raises DivergenceError with the failing step index if the state leaves the
    finite range.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    span = t_end - t0
    if span == 0:
        return u0, t0, 0
    ratio = span / dt
    nsteps = round(ratio)
    if nsteps < 1 or abs(ratio - nsteps) > 1e-9 * max(1.0, ratio):
        raise ValueError(
            f"(t_end - t0)/dt = {ratio!r} is not an integer step count")
    dt_eff = span / nsteps

    u = np.asarray(u0, dtype=float).copy()
    t = t0
    for m in range(nsteps):
        u = step(L, u, t, dt_eff)
        if not np.all(np.isfinite(u)):
            raise DivergenceError(f"non-finite state after step {m + 1}", step=m + 1)
        t = t0 + (m + 1) * dt_eff
        if callback is not None:
            callback(m + 1, t, u)
    return u, t, nsteps


def stability_function(z: complex) -> complex:
    """Amplification factor of the scheme on u' = lambda*u with z = lambda*dt.

    Computed by running the actual step on the scalar problem, so the analysis
    can never drift from the stepping code.
    """
    return step(lambda t, u: z * u, 1.0 + 0.0j, 0.0, 1.0)
