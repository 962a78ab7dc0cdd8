"""Randomized self-check suites over the package's structural identities.

Four suites back the command line `conformance` subcommand: the matrix
representation being multiplicative, associativity of the geometric
product, exactness of the spin commutators, and the three-way agreement of
the transition probability (closed form, rotor dynamics, matrix dynamics).

They double as a tamper check for modified builds: flipping any single
sign in the blade product table makes the homomorphism suite fail, which
is a handy manual sanity procedure after touching the table construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matrixqm
from .algebra import Multivector, commutator, gp, hodge_dual, norm, scale
from .spinor import basis_eps
from .twostate import (
    FieldConfig,
    evolution_rotor,
    evolve,
    hamiltonian_from_field,
    probability,
    rabi_probability,
    spin_vectors,
)

__all__ = [
    "SuiteResult",
    "suite_homomorphism",
    "suite_associativity",
    "suite_commutators",
    "suite_rabi_triangle",
    "run_all",
    "HOMOMORPHISM_TOL",
    "ASSOCIATIVITY_TOL",
    "RABI_TRIANGLE_TOL",
]

HOMOMORPHISM_TOL = 1e-11
ASSOCIATIVITY_TOL = 1e-12
RABI_TRIANGLE_TOL = 1e-10

_COEFF_SPAN = 10.0


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    worst: float
    tol: float
    count: int


def _random_mv(rng: np.random.Generator) -> Multivector:
    return Multivector(rng.uniform(-_COEFF_SPAN, _COEFF_SPAN, 8))


def suite_homomorphism(rng: np.random.Generator, count: int) -> SuiteResult:
    """rep(a b) == rep(a) rep(b), entrywise, over random pairs."""
    worst = 0.0
    for _ in range(count):
        a, b = _random_mv(rng), _random_mv(rng)
        dev = np.max(
            np.abs(matrixqm.rep(gp(a, b)) - matrixqm.rep(a) @ matrixqm.rep(b))
        )
        worst = max(worst, float(dev))
    return SuiteResult("homomorphism", worst <= HOMOMORPHISM_TOL, worst, HOMOMORPHISM_TOL, count)


def suite_associativity(rng: np.random.Generator, count: int) -> SuiteResult:
    """(a b) c == a (b c), scaled by the product of coefficient norms."""
    worst = 0.0
    for _ in range(count):
        a, b, c = _random_mv(rng), _random_mv(rng), _random_mv(rng)
        lhs = gp(gp(a, b), c)
        rhs = gp(a, gp(b, c))
        scale_factor = max(1.0, norm(a) * norm(b) * norm(c))
        dev = float(np.max(np.abs(lhs.coeffs - rhs.coeffs))) / scale_factor
        worst = max(worst, dev)
    return SuiteResult("associativity", worst <= ASSOCIATIVITY_TOL, worst, ASSOCIATIVITY_TOL, count)


def suite_commutators() -> SuiteResult:
    """[S_i, S_j] = hbar e123 eps_ijk S_k, exact (tolerance zero)."""
    s_ops = spin_vectors(1.0)
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
    worst = 0.0
    for i in range(3):
        for j in range(3):
            lhs = commutator(s_ops[i], s_ops[j])
            rhs = Multivector(
                sum(eps[i, j, k] * hodge_dual(s_ops[k]).coeffs for k in range(3))
            )
            worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    return SuiteResult("commutators", worst == 0.0, worst, 0.0, 9)


def suite_rabi_triangle(rng: np.random.Generator, count: int) -> SuiteResult:
    """Transition probability out of eps_plus agrees pairwise between the
    closed form, the rotor dynamics and the matrix dynamics."""
    eps_plus, eps_minus = basis_eps()
    psi0_col = matrixqm.spinor_rep(eps_plus)
    minus_col = matrixqm.spinor_rep(eps_minus)
    worst = 0.0
    done = 0
    while done < count:
        b = rng.uniform(-5.0, 5.0, 3)
        if b[0] == 0.0 and b[1] == 0.0 and b[2] == 0.0:
            continue
        t = rng.uniform(0.0, 10.0)
        cfg = FieldConfig(B=tuple(b))
        h = hamiltonian_from_field(cfg)
        p_closed = rabi_probability(cfg, t)
        psi_t = evolve(eps_plus, evolution_rotor(h, t, cfg.hbar))
        p_rotor = probability(eps_minus, psi_t)
        col_t = matrixqm.evolve_matrix(
            psi0_col, matrixqm.rep(h.as_multivector()), t, cfg.hbar
        )
        p_matrix = matrixqm.probability_matrix(minus_col, col_t)
        worst = max(
            worst,
            abs(p_closed - p_rotor),
            abs(p_rotor - p_matrix),
            abs(p_closed - p_matrix),
        )
        done += 1
    return SuiteResult("rabi_triangle", worst <= RABI_TRIANGLE_TOL, worst, RABI_TRIANGLE_TOL, count)


def run_all(seed: int, count: int) -> list[SuiteResult]:
    """Run every suite with a deterministic stream derived from the seed."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    return [
        suite_homomorphism(rng, count),
        suite_associativity(rng, count),
        suite_commutators(),
        suite_rabi_triangle(rng, count),
    ]
