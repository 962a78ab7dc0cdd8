"""Two-state Hamiltonians and their dynamics in the 3D algebra.

A Hermitian two-state Hamiltonian is a grade-{0,1} multivector
H = h0 + h1 e1 + h2 e2 + h3 e3.  Writing the vector part in polar form
(theta from e3, azimuth phi) gives a rotor

    R = exp(-e123 e3 phi/2) exp(-e123 e2 theta/2)

that diagonalizes H by sandwich: reverse(R) H R = h0 + |h| e3, so the
eigenvalues are h0 +/- |h| and the eigenstates are R acting on the ideal
basis spinors.

A magnetic field B couples as H = -(q hbar / 2 m) B with zero scalar part,
so time evolution is a pure rotor U(t) = exp_bivector(-(t/hbar) e123 h),
which precesses states clockwise about the field axis at alpha(t) =
q |B| t / m.  Observables (spin expectations, transition probabilities, the
precessing axis u(t) = U e3 reverse(U)) come out of scalar-grade
projections and reproduce the usual closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    E2,
    E3,
    Multivector,
    Rotor,
    exp_bivector,
    gp,
    hodge_dual,
    reverse,
    rotor_axis_angle,
    sandwich,
    scale,
    vector,
)
from .spinor import AlgebraicSpinor, basis_eps, inner, left_mul

__all__ = [
    "Hamiltonian",
    "FieldConfig",
    "EigenSystem",
    "DIAG_CONSISTENCY_TOL",
    "polar_angles",
    "diagonalizing_rotor",
    "diagonalize",
    "eigensystem",
    "hamiltonian_from_field",
    "evolution_rotor",
    "evolve",
    "expectation",
    "probability",
    "rabi_probability",
    "polar_state",
    "precession_trajectory",
    "spin_vector",
    "u_vector",
    "u_vector_closed_form",
    "spin_vectors",
]

DIAG_CONSISTENCY_TOL = 1e-12


@dataclass(frozen=True)
class Hamiltonian:
    """Hermitian observable h0 + h . e, stored as (h0, (h1, h2, h3))."""

    h0: float
    h: tuple[float, float, float]

    def __post_init__(self):
        h0 = float(self.h0)
        h = tuple(float(x) for x in self.h)
        if len(h) != 3:
            raise ValueError("vector part must have 3 components")
        if not (math.isfinite(h0) and all(math.isfinite(x) for x in h)):
            raise ValueError("Hamiltonian coefficients must be finite")
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "h", h)

    @property
    def r_norm(self) -> float:
        """Length of the vector part; half the level splitting."""
        return math.sqrt(self.h[0] ** 2 + self.h[1] ** 2 + self.h[2] ** 2)

    def vector_part(self) -> Multivector:
        return vector(*self.h)

    def as_multivector(self) -> Multivector:
        return Multivector(
            [self.h0, self.h[0], self.h[1], self.h[2], 0.0, 0.0, 0.0, 0.0]
        )

    def split_scalar(self) -> tuple[float, "Hamiltonian"]:
        """(h0, vector-only Hamiltonian); the scalar part only ever
        contributes a center phase exp(-e123 h0 t / hbar) to evolution."""
        return self.h0, Hamiltonian(0.0, self.h)


@dataclass(frozen=True)
class FieldConfig:
    """Static magnetic field B with coupling charge q, mass m and hbar."""

    B: tuple[float, float, float]
    q: float = 1.0
    m: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        B = tuple(float(x) for x in self.B)
        if len(B) != 3:
            raise ValueError("field must have 3 components")
        q, m, hbar = float(self.q), float(self.m), float(self.hbar)
        vals = (*B, q, m, hbar)
        if not all(math.isfinite(x) for x in vals):
            raise ValueError("field configuration must be finite")
        if m <= 0.0 or hbar <= 0.0:
            raise ValueError("mass and hbar must be positive")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "hbar", hbar)

    @property
    def b_norm(self) -> float:
        return math.sqrt(self.B[0] ** 2 + self.B[1] ** 2 + self.B[2] ** 2)

    @property
    def omega(self) -> float:
        """Transition angular frequency q |B| / m."""
        return self.q * self.b_norm / self.m

    @property
    def omega_axial(self) -> float:
        """Signed precession frequency q B3 / m for an axial field."""
        return self.q * self.B[2] / self.m

    def alpha(self, t: float) -> float:
        """Accumulated precession angle q |B| t / m."""
        return self.q * self.b_norm * float(t) / self.m


@dataclass(frozen=True)
class EigenSystem:
    """Diagonalization result; e_plus >= e_minus always holds."""

    e_plus: float
    e_minus: float
    rotor: Rotor
    psi_plus: AlgebraicSpinor
    psi_minus: AlgebraicSpinor
    degenerate: bool = False


def polar_angles(h: Hamiltonian) -> tuple[float, float]:
    """(theta, phi) of the vector part: theta in [0, pi] from e3, phi in
    (-pi, pi] in the e1 e2 plane; both zero when the vector part vanishes."""
    h1, h2, h3 = h.h
    theta = math.atan2(math.hypot(h1, h2), h3)
    phi = math.atan2(h2, h1)
    if phi == -math.pi:
        phi = math.pi
    return theta, phi


def diagonalizing_rotor(h: Hamiltonian) -> Rotor:
    """Rotor R with reverse(R) H R = h0 + |h| e3 (identity when |h| = 0)."""
    if h.r_norm == 0.0:
        return Rotor.identity()
    theta, phi = polar_angles(h)
    return rotor_axis_angle(E3, phi) * rotor_axis_angle(E2, theta)


def diagonalize(h: Hamiltonian) -> tuple[Hamiltonian, Rotor]:
    """(H0, R) with H0 = h0 + |h| e3.

    H0 is computed both by the norm shortcut and by the explicit sandwich
    reverse(R) H R; the two routes agreeing within 1e-12 is part of the
    contract, so a disagreement (which no float input should produce)
    raises rather than returning silently inconsistent data.
    """
    r = diagonalizing_rotor(h)
    h_diag = Hamiltonian(h.h0, (0.0, 0.0, h.r_norm))
    via_sandwich = sandwich(r.reverse(), h.as_multivector())
    dev = float(np.max(np.abs(via_sandwich.coeffs - h_diag.as_multivector().coeffs)))
    if dev > DIAG_CONSISTENCY_TOL:
        raise ArithmeticError(
            f"diagonalization routes disagree by {dev:.3e} (> {DIAG_CONSISTENCY_TOL})"
        )
    return h_diag, r


def eigensystem(h: Hamiltonian) -> EigenSystem:
    """Eigenvalues h0 +/- |h| and rotor-generated eigenspinors.

    The minus eigenspinor uses the rotor at polar angle theta + pi, which
    lands on the antipodal axis.  A vanishing vector part degenerates to
    (eps_plus, eps_minus) with the identity rotor and sets the flag.
    """
    eps_plus, eps_minus = basis_eps()
    r_norm = h.r_norm
    if r_norm == 0.0:
        return EigenSystem(
            e_plus=h.h0,
            e_minus=h.h0,
            rotor=Rotor.identity(),
            psi_plus=eps_plus,
            psi_minus=eps_minus,
            degenerate=True,
        )
    theta, phi = polar_angles(h)
    r = diagonalizing_rotor(h)
    r_minus = rotor_axis_angle(E3, phi) * rotor_axis_angle(E2, theta + math.pi)
    return EigenSystem(
        e_plus=h.h0 + r_norm,
        e_minus=h.h0 - r_norm,
        rotor=r,
        psi_plus=left_mul(r.mv, eps_plus),
        psi_minus=left_mul(r_minus.mv, eps_plus),
        degenerate=False,
    )


def hamiltonian_from_field(cfg: FieldConfig) -> Hamiltonian:
    """Magnetic coupling H = -(q hbar / 2 m) B, always with h0 = 0."""
    k = -cfg.q * cfg.hbar / (2.0 * cfg.m)
    return Hamiltonian(0.0, (k * cfg.B[0], k * cfg.B[1], k * cfg.B[2]))


def evolution_rotor(h: Hamiltonian, t: float, hbar: float = 1.0) -> Rotor:
    """Time evolution rotor U(t) = exp_bivector(-(t/hbar) e123 h).

    Requires a pure-vector Hamiltonian.  A nonzero h0 would only add the
    center phase exp(-e123 h0 t / hbar), which is not a rotor; use
    Hamiltonian.split_scalar() and apply that phase to the amplitudes
    separately.
    """
    if h.h0 != 0.0:
        raise ValueError(
            "evolution_rotor needs h0 = 0; split_scalar() the Hamiltonian and "
            "carry exp(-e123 h0 t / hbar) on the amplitudes instead"
        )
    if not math.isfinite(float(t)) or not math.isfinite(float(hbar)) or hbar <= 0.0:
        raise ValueError("need finite t and positive finite hbar")
    return exp_bivector(scale(-float(t) / float(hbar), hodge_dual(h.vector_part())))


def evolve(psi0: AlgebraicSpinor, u: Rotor) -> AlgebraicSpinor:
    """Apply an evolution rotor to a normalized state."""
    if not psi0.is_normalized():
        raise ValueError("initial state must be normalized")
    return left_mul(u.mv, psi0)


def expectation(op: Hamiltonian | Multivector, psi: AlgebraicSpinor) -> float:
    """<op> = 2 <reverse(psi) op psi>_0 for a grade-{0,1} observable."""
    opm = op.as_multivector() if isinstance(op, Hamiltonian) else op
    c = opm.coeffs
    if any(c[i] != 0.0 for i in (4, 5, 6, 7)):
        raise ValueError("observable must be grade-{0,1}")
    if not psi.is_normalized():
        raise ValueError("state must be normalized")
    p = gp(reverse(psi.mv), gp(opm, psi.mv))
    return 2.0 * p[0]


def probability(u_n: AlgebraicSpinor, psi: AlgebraicSpinor) -> float:
    """Transition probability 2 <reverse(u) psi reverse(psi) u>_0.

    Equals the squared magnitude of inner(u_n, psi) for normalized states.
    """
    if not u_n.is_normalized() or not psi.is_normalized():
        raise ValueError("both states must be normalized")
    p = gp(gp(gp(reverse(u_n.mv), psi.mv), reverse(psi.mv)), u_n.mv)
    return 2.0 * p[0]


def rabi_probability(cfg: FieldConfig, t: float) -> float:
    """Closed-form transition probability out of eps_plus in a static field:
    (1/2) sin^2(theta) (1 - cos(omega t)) with omega = q |B| / m and theta
    the angle between B and e3.  Zero field gives identically zero."""
    b = cfg.b_norm
    if b == 0.0:
        return 0.0
    sin_theta = math.hypot(cfg.B[0], cfg.B[1]) / b
    return 0.5 * sin_theta * sin_theta * (1.0 - math.cos(cfg.omega * float(t)))


def polar_state(theta: float, phi: float = 0.0) -> AlgebraicSpinor:
    """Spin-up state along the (theta, phi) axis: R(phi, theta) eps_plus."""
    r = rotor_axis_angle(E3, float(phi)) * rotor_axis_angle(E2, float(theta))
    return left_mul(r.mv, basis_eps()[0])


def precession_trajectory(
    theta0: float,
    cfg: FieldConfig,
    t_grid: Iterable[float],
) -> list[tuple[float, float, float, float]]:
    """Spin expectation trajectory for an axial field B = (0, 0, B3).

    The state starts tilted by theta0 in the e3 e1 plane and the returned
    rows are (t, <S1>, <S2>, <S3>); they follow
    (hbar/2)(sin th0 cos(w t), -sin th0 sin(w t), cos th0) with w = q B3/m.
    """
    if cfg.B[0] != 0.0 or cfg.B[1] != 0.0:
        raise ValueError("precession trajectory requires an axial field (B1 = B2 = 0)")
    h = hamiltonian_from_field(cfg)
    psi0 = polar_state(theta0)
    s_ops = spin_vectors(cfg.hbar)
    rows = []
    for t in t_grid:
        t = float(t)
        psi_t = evolve(psi0, evolution_rotor(h, t, cfg.hbar))
        rows.append(
            (t, *(expectation(op, psi_t) for op in s_ops))
        )
    return rows


def spin_vector(psi_plus_rotor: Rotor, hbar: float = 1.0) -> tuple[float, float, float]:
    """Expectation spin direction of R eps_plus, via R (hbar/2) e3 reverse(R)."""
    v = sandwich(psi_plus_rotor, scale(0.5 * float(hbar), E3))
    return v[1], v[2], v[3]


def u_vector(cfg: FieldConfig, t: float) -> tuple[float, float, float]:
    """Precessing axis u(t) = U(t) e3 reverse(U(t)) for a nonzero field."""
    if cfg.b_norm == 0.0:
        raise ValueError("u_vector needs a nonzero field")
    u = evolution_rotor(hamiltonian_from_field(cfg), t, cfg.hbar)
    v = sandwich(u, E3)
    return v[1], v[2], v[3]


def u_vector_closed_form(cfg: FieldConfig, t: float) -> tuple[float, float, float]:
    """Closed form of u(t): with theta the field's tilt from e3 and
    alpha = q |B| t / m,

        u1 = (B1 cos th (1 - cos a) - B2 sin a) / |B|
        u2 = (B2 cos th (1 - cos a) + B1 sin a) / |B|
        u3 = cos^2 th + sin^2 th cos a

    i.e. e3 swept clockwise about the field axis, matching the sandwich
    route exactly up to roundoff."""
    b = cfg.b_norm
    if b == 0.0:
        raise ValueError("u_vector needs a nonzero field")
    b1, b2, b3 = cfg.B
    alpha = cfg.alpha(t)
    cos_th = b3 / b
    sin_th2 = (b1 * b1 + b2 * b2) / (b * b)
    ca, sa = math.cos(alpha), math.sin(alpha)
    u1 = (b1 * cos_th * (1.0 - ca) - b2 * sa) / b
    u2 = (b2 * cos_th * (1.0 - ca) + b1 * sa) / b
    u3 = cos_th * cos_th + sin_th2 * ca
    return u1, u2, u3


def spin_vectors(hbar: float = 1.0) -> tuple[Multivector, Multivector, Multivector]:
    """Spin observables S_i = (hbar/2) e_i; their commutators close as
    [S_i, S_j] = hbar e123 eps_ijk S_k exactly in floating point."""
    half = 0.5 * float(hbar)
    return (
        Multivector([0.0, half, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        Multivector([0.0, 0.0, half, 0.0, 0.0, 0.0, 0.0, 0.0]),
        Multivector([0.0, 0.0, 0.0, half, 0.0, 0.0, 0.0, 0.0]),
    )
