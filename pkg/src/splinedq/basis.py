"""Knot values of the three cubic-spline families and the modified end-basis.

Only values at the knots are ever needed: each family contributes a
(value, first-derivative, second-derivative) stencil on the three knots a
spline overlaps, plus the end-spline combinations that square up the basis.

Stencil entries are indexed by basis-minus-node offset: ``d_p1`` is the first
derivative of the spline attached to node j+1 evaluated at node j (i.e. the
spline's value one knot to the left of its own node).  With this convention
``d_p1 > 0`` for every family (rising flank of the bump) and the tridiagonal
weight systems read off directly: column j of the derivative right-hand side
holds (d_m1, 0, d_p1) at rows (j-1, j, j+1).
"""

from dataclasses import dataclass

import numpy as np

TRIG_MAX_SPACING = 2 * np.pi / 3  # sin(3h/2) vanishes at h = 2*pi/3

# validated range of the extended-family free parameter; lambda = 0 recovers
# the classical cubic B-spline
EXT_LAMBDA_MIN = -8.0
EXT_LAMBDA_MAX = 1.0


@dataclass(frozen=True)
class BasisFamily:
    """One of the three spline families, with its free parameter if any."""

    variant: str                # "trigonometric" | "exponential" | "extended"
    p: float | None = None      # exponential steepness, > 0
    lam: float | None = None    # extended free parameter, lambda = 0 -> cubic

    def __post_init__(self):
        if self.variant == "exponential":
            if self.p is None or self.p <= 0:
                raise ValueError(f"exponential family needs p > 0, got p={self.p}")
        elif self.variant == "extended":
            if self.lam is None or not (EXT_LAMBDA_MIN < self.lam < EXT_LAMBDA_MAX):
                raise ValueError(
                    f"extended family needs {EXT_LAMBDA_MIN} < lambda < {EXT_LAMBDA_MAX}, "
                    f"got lambda={self.lam}")
        elif self.variant != "trigonometric":
            raise ValueError(f"unknown basis variant {self.variant!r}")

    def stencil(self, h: float) -> "KnotStencil":
        if self.variant == "trigonometric":
            return trig_stencil(h)
        if self.variant == "exponential":
            return exp_stencil(h, self.p)
        return ext_stencil(h, self.lam)

    def label(self) -> str:
        if self.variant == "exponential":
            return f"exp(p={self.p:g})"
        if self.variant == "extended":
            return f"ext(lambda={self.lam:g})"
        return "trig"


def trigonometric() -> BasisFamily:
    return BasisFamily("trigonometric")


def exponential(p: float) -> BasisFamily:
    return BasisFamily("exponential", p=float(p))


def extended(lam: float) -> BasisFamily:
    return BasisFamily("extended", lam=float(lam))


@dataclass(frozen=True)
class KnotStencil:
    """Knot values of one spline: value / first / second derivative at offsets
    -1, 0, +1 (basis index minus node index)."""

    v_m1: float
    v_0: float
    v_p1: float
    d_m1: float
    d_0: float
    d_p1: float
    s_m1: float
    s_0: float
    s_p1: float

    def normalized(self) -> "KnotStencil":
        """Stencil scaled so the central value is 1 (families differ in overall
        normalization, which cancels in the weight systems)."""
        c = self.v_0
        return KnotStencil(*(np.array(self.as_tuple()) / c))

    def as_tuple(self):
        return (self.v_m1, self.v_0, self.v_p1,
                self.d_m1, self.d_0, self.d_p1,
                self.s_m1, self.s_0, self.s_p1)


def trig_stencil(h: float) -> KnotStencil:
    """Trigonometric cubic spline knot values for spacing h, 0 < h < 2*pi/3.

    The second-derivative central value is negative (bump maximum); the a6
    closed form is stored with that orientation, consistent with the other two
    families and verified against the piecewise definition.
    """
    if not (0 < h < TRIG_MAX_SPACING):
        raise ValueError(f"trigonometric basis requires 0 < h < 2*pi/3, got h={h}")
    a1 = np.sin(h / 2) ** 2 / (np.sin(h) * np.sin(1.5 * h))
    a2 = 2.0 / (1.0 + 2.0 * np.cos(h))
    a4 = 3.0 / (4.0 * np.sin(1.5 * h))
    a3 = -a4
    a5 = (3.0 + 9.0 * np.cos(h)) / (
        16.0 * np.sin(h / 2) ** 2 * (2.0 * np.cos(h / 2) + np.cos(1.5 * h)))
    a6 = 3.0 * np.cos(h / 2) ** 2 / (np.sin(h / 2) ** 2 * (2.0 + 4.0 * np.cos(h)))
    return KnotStencil(v_m1=a1, v_0=a2, v_p1=a1,
                       d_m1=a3, d_0=0.0, d_p1=a4,
                       s_m1=a5, s_0=-a6, s_p1=a5)


def _sinh_minus_x(x: float) -> float:
    # sinh(x) - x without cancellation; series below threshold
    if x < 0.05:
        x2 = x * x
        return x ** 3 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0 * (1.0 + x2 / 72.0)))
    return np.sinh(x) - x


def _xcosh_minus_sinh(x: float) -> float:
    # x*cosh(x) - sinh(x) = sum_{k>=1} 2k x^(2k+1)/(2k+1)!
    if x < 0.05:
        x2 = x * x
        return x ** 3 / 3.0 * (1.0 + x2 / 10.0 * (1.0 + x2 / 28.0 * (1.0 + x2 / 54.0)))
    return x * np.cosh(x) - np.sinh(x)


def exp_stencil(h: float, p: float) -> KnotStencil:
    """Exponential cubic spline knot values (central value normalized to 1).

    Small p*h suffers catastrophic cancellation in sinh(ph)-ph and
    ph*cosh(ph)-sinh(ph); both are evaluated by series in that regime so the
    p -> 0 cubic limit is clean at machine precision.
    """
    if p <= 0:
        raise ValueError(f"exponential basis requires p > 0, got p={p}")
    if h <= 0:
        raise ValueError(f"spacing must be positive, got h={h}")
    x = p * h
    num = _sinh_minus_x(x)          # sinh(ph) - ph
    den = _xcosh_minus_sinh(x)      # ph*cosh(ph) - sinh(ph) > 0
    v1 = num / (2.0 * den)
    cosh_m1 = 2.0 * np.sinh(x / 2.0) ** 2
    dp = p * cosh_m1 / (2.0 * den)  # = -p(1-cosh)/(2(ph cosh - sinh)) > 0
    s = np.sinh(x)
    s0 = -p * p * s / den
    s1 = p * p * s / (2.0 * den)
    return KnotStencil(v_m1=v1, v_0=1.0, v_p1=v1,
                       d_m1=-dp, d_0=0.0, d_p1=dp,
                       s_m1=s1, s_0=s0, s_p1=s1)


def ext_stencil(h: float, lam: float) -> KnotStencil:
    """Extended cubic spline knot values; lambda = 0 is the classical cubic.

    Central value is (8+lambda)/12 (dimensionless): the corner identity
    theta + 2*wp = 1 of the modified value matrix forces this form.
    """
    if not (EXT_LAMBDA_MIN < lam < EXT_LAMBDA_MAX):
        raise ValueError(
            f"extended basis requires {EXT_LAMBDA_MIN} < lambda < {EXT_LAMBDA_MAX}, "
            f"got lambda={lam}")
    if h <= 0:
        raise ValueError(f"spacing must be positive, got h={h}")
    wp = (4.0 - lam) / 24.0
    theta = (8.0 + lam) / 12.0
    om = (2.0 + lam) / (2.0 * h * h)
    return KnotStencil(v_m1=wp, v_0=theta, v_p1=wp,
                       d_m1=-0.5 / h, d_0=0.0, d_p1=0.5 / h,
                       s_m1=om, s_0=-2.0 * om, s_p1=om)


def modified_basis_rows(st: KnotStencil, N: int):
    """Value matrix bands and first-derivative RHS columns of the modified basis.

    The end splines are combined (phi_1 = B_1 + 2 B_0, phi_2 = B_2 - B_0 and
    mirrored at the top) so exactly N basis functions live on N nodes.  Returns
    ``(sub, diag, sup, rhs)`` where the three bands describe the N x N
    tridiagonal value matrix (corner entries v_0 + 2 v_1, zeros at (2,1) and
    (N-1,N)) and ``rhs[:, j]`` holds the first-derivative values of every
    modified basis function at node j.

    The corner RHS entries come from the modification formulas themselves, not
    from any displayed constant: column 1 is (2 d_m1, d_p1 - d_m1, 0, ...).
    """
    if N < 4:
        raise ValueError(f"need at least 4 nodes, got N={N}")
    v1 = st.v_p1
    sub = np.full(N - 1, v1)
    diag = np.full(N, st.v_0)
    sup = np.full(N - 1, v1)
    diag[0] = st.v_0 + 2.0 * v1
    diag[-1] = st.v_0 + 2.0 * v1
    sub[0] = 0.0
    sup[-1] = 0.0

    dm, dp = st.d_m1, st.d_p1
    rhs = np.zeros((N, N))
    rows = np.arange(1, N - 1)
    rhs[rows - 1, rows] = dm
    rhs[rows + 1, rows] = dp
    rhs[0, 0] = 2.0 * dm            # phi_1' = B_1' + 2 B_0'
    rhs[1, 0] = dp - dm             # phi_2' = B_2' - B_0'
    rhs[N - 2, N - 1] = dm - dp     # mirror
    rhs[N - 1, N - 1] = 2.0 * dp
    return sub, diag, sup, rhs


def second_derivative_rhs(st: KnotStencil, N: int) -> np.ndarray:
    """Second-derivative RHS columns of the modified basis.

    Not used to build the production weights (those come from the recursion);
    kept as the independent oracle the second-derivative stencils admit.
    """
    if N < 4:
        raise ValueError(f"need at least 4 nodes, got N={N}")
    sm, s0, sp = st.s_m1, st.s_0, st.s_p1
    rhs = np.zeros((N, N))
    rows = np.arange(1, N - 1)
    rhs[rows - 1, rows] = sm
    rhs[rows, rows] = s0
    rhs[rows + 1, rows] = sp
    rhs[0, 0] = s0 + 2.0 * sm
    rhs[1, 0] = sp - sm
    rhs[N - 2, N - 1] = sm - sp
    rhs[N - 1, N - 1] = s0 + 2.0 * sp
    return rhs
