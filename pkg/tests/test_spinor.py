import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gatss import matrixqm
from gatss.algebra import (
    E1,
    E2,
    E3,
    E123,
    ONE,
    ZERO,
    Multivector,
    gp,
    reverse,
    rotor_axis_angle,
    scale,
)
from gatss.spinor import (
    AlgebraicSpinor,
    CenterScalar,
    basis_eps,
    from_amplitudes,
    idempotent_f,
    inner,
    left_mul,
    to_amplitudes,
)

EPS_PLUS, EPS_MINUS = basis_eps()

# halving then doubling a coefficient is exact for normal floats but not
# for subnormals, so keep generated magnitudes out of the underflow range
amp_component = st.floats(
    -10.0, 10.0, allow_nan=False, allow_infinity=False, width=64
).filter(lambda x: x == 0.0 or abs(x) > 1e-300)
center_strategy = st.builds(CenterScalar, amp_component, amp_component)


def random_mv(rng, span=10.0):
    return Multivector(rng.uniform(-span, span, 8))


def random_spinor(rng, normalized=False):
    raw = rng.normal(size=4)
    if normalized:
        raw = raw / np.linalg.norm(raw)
    return from_amplitudes(
        CenterScalar(raw[0], raw[1]), CenterScalar(raw[2], raw[3])
    )


class TestIdempotent:
    def test_f_coefficients(self):
        f = idempotent_f()
        assert f.coeffs.tolist() == [0.5, 0, 0, 0.5, 0, 0, 0, 0]

    def test_f_squared_is_f_exactly(self):
        f = idempotent_f()
        assert gp(f, f) == f

    def test_e3_absorbed_exactly(self):
        f = idempotent_f()
        assert gp(E3, f) == f

    def test_f_e1_f_annihilates_exactly(self):
        f = idempotent_f()
        assert gp(f, gp(E1, f)) == ZERO

    def test_f_is_self_reverse(self):
        f = idempotent_f()
        assert reverse(f) == f


class TestBasis:
    def test_eps_minus_coefficients(self):
        # e1 f = (e1 - e31)/2
        assert EPS_MINUS.mv.coeffs.tolist() == [0, 0.5, 0, 0, 0, -0.5, 0, 0]

    def test_orthonormality(self):
        assert inner(EPS_PLUS, EPS_PLUS) == CenterScalar(1.0, 0.0)
        assert inner(EPS_MINUS, EPS_MINUS) == CenterScalar(1.0, 0.0)
        assert inner(EPS_PLUS, EPS_MINUS) == CenterScalar(0.0, 0.0)
        assert inner(EPS_MINUS, EPS_PLUS) == CenterScalar(0.0, 0.0)


class TestCenterScalar:
    @settings(max_examples=80, deadline=None)
    @given(center_strategy, center_strategy)
    def test_matches_complex_arithmetic(self, a, b):
        prod = (a * b).to_complex()
        assert abs(prod - a.to_complex() * b.to_complex()) <= 1e-12 * max(
            1.0, abs(a.to_complex()) * abs(b.to_complex())
        )
        assert (a + b).to_complex() == a.to_complex() + b.to_complex()

    def test_reverse_is_conjugation(self):
        c = CenterScalar(2.0, -3.0)
        assert c.reverse() == CenterScalar(2.0, 3.0)
        assert c.abs2() == 13.0

    def test_as_multivector_round_trip(self):
        c = CenterScalar(1.5, -0.25)
        m = c.as_multivector()
        assert m.coeffs.tolist() == [1.5, 0, 0, 0, 0, 0, 0, -0.25]

    def test_center_elements_commute_exactly(self):
        rng = np.random.default_rng(71)
        for _ in range(200):
            c = CenterScalar(*rng.uniform(-10, 10, 2)).as_multivector()
            m = random_mv(rng)
            assert gp(c, m) == gp(m, c)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            CenterScalar(math.inf, 0.0)


class TestIdealMembership:
    def test_constructor_accepts_members(self):
        AlgebraicSpinor(idempotent_f())
        AlgebraicSpinor(gp(E1, idempotent_f()))

    def test_constructor_rejects_outsiders(self):
        with pytest.raises(ValueError):
            AlgebraicSpinor(E1)
        with pytest.raises(ValueError):
            AlgebraicSpinor(ONE)
        with pytest.raises(ValueError):
            AlgebraicSpinor(Multivector([0.5, 0, 0, 0.5 + 1e-9, 0, 0, 0, 0]))

    def test_constructor_tolerates_tiny_dust(self):
        AlgebraicSpinor(Multivector([0.5, 0, 0, 0.5 + 1e-13, 0, 0, 0, 0]))

    def test_closure_under_left_multiplication_exact(self):
        # membership constraints involve only sign flips and copies, so
        # arbitrary left factors keep them bitwise true
        rng = np.random.default_rng(73)
        for _ in range(10_000):
            m = random_mv(rng)
            psi = random_spinor(rng)
            c = left_mul(m, psi).mv.coeffs
            assert c[3] == c[0]
            assert c[6] == c[7]
            assert c[5] == -c[1]
            assert c[4] == c[2]


class TestAmplitudes:
    @settings(max_examples=100, deadline=None)
    @given(center_strategy, center_strategy)
    def test_round_trip_exact(self, cp, cm):
        got_p, got_m = to_amplitudes(from_amplitudes(cp, cm))
        assert got_p == cp and got_m == cm

    def test_basis_amplitudes(self):
        assert to_amplitudes(EPS_PLUS) == (CenterScalar(1, 0), CenterScalar(0, 0))
        assert to_amplitudes(EPS_MINUS) == (CenterScalar(0, 0), CenterScalar(1, 0))

    def test_rotor_tilt_matches_matrix_oracle(self):
        # amplitudes of R eps_plus cross-checked against the 2x2 image of R
        for theta in (0.3, 0.7, 2.0, math.pi / 4):
            r = rotor_axis_angle(E2, theta)
            psi = left_mul(r.mv, EPS_PLUS)
            got = np.array([c.to_complex() for c in to_amplitudes(psi)])
            expected = matrixqm.rep(r.mv) @ np.array([1.0 + 0j, 0.0])
            assert np.max(np.abs(got - expected)) <= 1e-15
            assert abs(got[0] - math.cos(theta / 2)) <= 1e-15
            assert abs(got[1] - math.sin(theta / 2)) <= 1e-15

    def test_pseudoscalar_acts_as_imaginary_unit(self):
        psi = left_mul(E123, EPS_PLUS)
        assert to_amplitudes(psi) == (CenterScalar(0.0, 1.0), CenterScalar(0.0, 0.0))

    def test_amplitudes_coerce_plain_numbers(self):
        psi = from_amplitudes(1.0, 0.0)
        assert psi == EPS_PLUS
        psi = from_amplitudes(0.6, complex(0.0, 0.8))
        cp, cm = to_amplitudes(psi)
        assert cp == CenterScalar(0.6, 0.0) and cm == CenterScalar(0.0, 0.8)


class TestInner:
    def test_matches_matrix_oracle(self):
        rng = np.random.default_rng(79)
        for _ in range(500):
            a, b = random_spinor(rng), random_spinor(rng)
            got = inner(a, b).to_complex()
            expected = complex(np.vdot(matrixqm.spinor_rep(a), matrixqm.spinor_rep(b)))
            assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))

    def test_sesquilinearity(self):
        rng = np.random.default_rng(83)
        for _ in range(200):
            a, b = random_spinor(rng), random_spinor(rng)
            c = CenterScalar(*rng.uniform(-5, 5, 2))
            scale_cap = max(1.0, abs(c) * abs(inner(a, b)))
            right = inner(a, left_mul(c.as_multivector(), b))
            assert abs((right - c * inner(a, b)).to_complex()) <= 1e-12 * scale_cap
            left = inner(left_mul(c.as_multivector(), a), b)
            assert abs((left - c.reverse() * inner(a, b)).to_complex()) <= 1e-12 * scale_cap

    def test_norm_is_real_nonnegative(self):
        rng = np.random.default_rng(89)
        for _ in range(200):
            a = random_spinor(rng)
            n = inner(a, a)
            assert abs(n.ps) <= 1e-12 * max(1.0, n.re)
            assert n.re >= 0.0

    def test_rotor_action_preserves_norm(self):
        rng = np.random.default_rng(97)
        for _ in range(200):
            v = rng.uniform(-1, 1, 3)
            while np.linalg.norm(v) < 1e-3:
                v = rng.uniform(-1, 1, 3)
            from gatss.algebra import vector

            r = rotor_axis_angle(
                vector(*(v / np.linalg.norm(v))), rng.uniform(0, 2 * math.pi)
            )
            psi = random_spinor(rng)
            before = inner(psi, psi)
            after = inner(left_mul(r.mv, psi), left_mul(r.mv, psi))
            assert abs((after - before).to_complex()) <= 1e-12 * max(1.0, before.re)


class TestRepresentationConsistency:
    @settings(max_examples=100, deadline=None)
    @given(center_strategy, center_strategy)
    def test_spinor_rep_returns_amplitudes_exactly(self, cp, cm):
        col = matrixqm.spinor_rep(from_amplitudes(cp, cm))
        assert col[0] == cp.to_complex()
        assert col[1] == cm.to_complex()


class TestNormalization:
    def test_is_normalized(self):
        assert EPS_PLUS.is_normalized()
        assert not from_amplitudes(2.0, 0.0).is_normalized()

    def test_normalized(self):
        psi = from_amplitudes(3.0, 4.0).normalized()
        assert abs(inner(psi, psi).re - 1.0) <= 1e-15
        with pytest.raises(ValueError):
            from_amplitudes(0.0, 0.0).normalized()


class TestJson:
    def test_round_trip(self):
        psi = from_amplitudes(CenterScalar(0.6, 0.0), CenterScalar(0.0, -0.8))
        blob = psi.to_json_dict()
        assert blob == {"c_plus": [0.6, 0.0], "c_minus": [0.0, -0.8]}
        assert AlgebraicSpinor.from_json_dict(blob) == psi

    def test_bad_payloads_rejected(self):
        with pytest.raises(ValueError):
            AlgebraicSpinor.from_json_dict({"c_plus": [1.0, 0.0]})
        with pytest.raises(ValueError):
            AlgebraicSpinor.from_json_dict({"c_plus": [1.0], "c_minus": [0.0, 0.0]})
