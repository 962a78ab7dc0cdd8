import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gatss import matrixqm
from gatss.algebra import (
    BLADE_NAMES,
    E1,
    E2,
    E3,
    E12,
    E23,
    E31,
    E123,
    ONE,
    PSEUDOSCALAR,
    ZERO,
    Multivector,
    Quaternion,
    Rotor,
    add,
    commutator,
    exp_bivector,
    gp,
    grade,
    hodge_dual,
    norm,
    quaternion_embed,
    quaternion_polar,
    reverse,
    rotor_axis_angle,
    sandwich,
    scale,
    vector,
    wedge,
)

BASIS_VECTORS = (E1, E2, E3)
ALL_BLADES = (ONE, E1, E2, E3, E23, E31, E12, E123)

EPS = np.zeros((3, 3, 3))
EPS[0, 1, 2] = EPS[1, 2, 0] = EPS[2, 0, 1] = 1.0
EPS[0, 2, 1] = EPS[2, 1, 0] = EPS[1, 0, 2] = -1.0

finite_coeff = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False, width=64)
mv_strategy = st.lists(finite_coeff, min_size=8, max_size=8).map(Multivector)


def random_mv(rng, span=10.0):
    return Multivector(rng.uniform(-span, span, 8))


def random_unit_axis(rng):
    v = rng.uniform(-1.0, 1.0, 3)
    while np.linalg.norm(v) < 1e-3:
        v = rng.uniform(-1.0, 1.0, 3)
    v = v / np.linalg.norm(v)
    return vector(*v)


def random_rotor(rng):
    return rotor_axis_angle(random_unit_axis(rng), rng.uniform(0.0, 2.0 * math.pi))


class TestProductTable:
    def test_generator_relations_exact(self):
        # e_l e_m = delta_lm + eps_lmn e123 e_n, with no roundoff at all
        for l in range(3):
            for m in range(3):
                got = gp(BASIS_VECTORS[l], BASIS_VECTORS[m])
                expected = np.zeros(8)
                if l == m:
                    expected[0] = 1.0
                for n in range(3):
                    if EPS[l, m, n] != 0.0:
                        expected += EPS[l, m, n] * hodge_dual(BASIS_VECTORS[n]).coeffs
                assert np.array_equal(got.coeffs, expected)

    def test_commutator_identity_exact(self):
        for l in range(3):
            for m in range(3):
                got = commutator(BASIS_VECTORS[l], BASIS_VECTORS[m])
                expected = np.zeros(8)
                for n in range(3):
                    expected += 2.0 * EPS[l, m, n] * hodge_dual(BASIS_VECTORS[n]).coeffs
                assert np.array_equal(got.coeffs, expected)

    def test_canonical_blade_products(self):
        assert gp(E2, E3) == E23
        assert gp(E3, E1) == E31
        assert gp(E1, E2) == E12
        assert gp(E1, E3) == -E31
        assert gp(E123, E123) == -ONE

    def test_annihilating_product(self):
        assert gp(ONE + E1, ONE - E1) == ZERO

    def test_pseudoscalar_is_central_exact(self):
        rng = np.random.default_rng(7)
        for b in ALL_BLADES:
            assert gp(PSEUDOSCALAR, b) == gp(b, PSEUDOSCALAR)
        for _ in range(100):
            a = random_mv(rng)
            assert gp(PSEUDOSCALAR, a) == gp(a, PSEUDOSCALAR)

    def test_gp_matches_matrix_oracle(self):
        # differential check against the independent 2x2 representation
        rng = np.random.default_rng(11)
        for _ in range(300):
            a, b = random_mv(rng), random_mv(rng)
            via_matrix = matrixqm.unrep(matrixqm.rep(a) @ matrixqm.rep(b))
            assert gp(a, b).allclose(via_matrix, 1e-11)


class TestGradeAddScale:
    def test_grade_partition(self):
        rng = np.random.default_rng(3)
        a = random_mv(rng)
        total = np.zeros(8)
        for k in range(4):
            total = total + grade(a, k).coeffs
        assert np.array_equal(total, a.coeffs)

    def test_grade_selects_expected_indices(self):
        a = Multivector([1, 2, 3, 4, 5, 6, 7, 8])
        assert grade(a, 0).coeffs.tolist() == [1, 0, 0, 0, 0, 0, 0, 0]
        assert grade(a, 1).coeffs.tolist() == [0, 2, 3, 4, 0, 0, 0, 0]
        assert grade(a, 2).coeffs.tolist() == [0, 0, 0, 0, 5, 6, 7, 0]
        assert grade(a, 3).coeffs.tolist() == [0, 0, 0, 0, 0, 0, 0, 8]

    def test_grade_rejects_bad_index(self):
        with pytest.raises(ValueError):
            grade(ONE, 4)
        with pytest.raises(ValueError):
            grade(ONE, -1)

    def test_add_and_scale(self):
        a = Multivector([1, 2, 3, 4, 5, 6, 7, 8])
        b = Multivector([8, 7, 6, 5, 4, 3, 2, 1])
        assert add(a, b).coeffs.tolist() == [9.0] * 8
        assert scale(-2.0, a).coeffs.tolist() == [-2, -4, -6, -8, -10, -12, -14, -16]


class TestReversion:
    @settings(max_examples=80, deadline=None)
    @given(mv_strategy)
    def test_involution(self, a):
        assert reverse(reverse(a)) == a

    def test_sign_pattern(self):
        assert reverse(E1) == E1
        assert reverse(E12) == -E12
        assert reverse(E123) == -E123

    @settings(max_examples=80, deadline=None)
    @given(mv_strategy, mv_strategy)
    def test_anti_automorphism(self, a, b):
        lhs = reverse(gp(a, b))
        rhs = gp(reverse(b), reverse(a))
        tol = 1e-12 * max(1.0, norm(a) * norm(b))
        assert lhs.allclose(rhs, tol)


class TestHodgeDual:
    def test_blade_images(self):
        assert hodge_dual(ONE) == E123
        assert hodge_dual(E1) == E23
        assert hodge_dual(E2) == E31
        assert hodge_dual(E3) == E12
        assert hodge_dual(E123) == -ONE

    def test_double_dual_negates_exactly(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a = random_mv(rng)
            assert hodge_dual(hodge_dual(a)) == -a


class TestNorm:
    def test_examples(self):
        assert norm(ONE + E1) == math.sqrt(2.0)
        assert norm(ZERO) == 0.0

    def test_invariant_under_rotor_products(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            r = random_rotor(rng)
            a = random_mv(rng)
            assert abs(norm(gp(r.mv, a)) - norm(a)) <= 1e-12 * max(1.0, norm(a))


class TestAssociativity:
    @settings(max_examples=80, deadline=None)
    @given(mv_strategy, mv_strategy, mv_strategy)
    def test_triple_products(self, a, b, c):
        lhs = gp(gp(a, b), c)
        rhs = gp(a, gp(b, c))
        tol = 1e-12 * max(1.0, norm(a) * norm(b) * norm(c))
        assert lhs.allclose(rhs, tol)


class TestExpBivector:
    def test_zero_gives_identity_exactly(self):
        assert exp_bivector(ZERO).mv == ONE

    def test_rejects_non_bivector(self):
        with pytest.raises(ValueError):
            exp_bivector(E1)
        with pytest.raises(ValueError):
            exp_bivector(ONE + E12)

    def test_unit_axis_example(self):
        # exp of -(e123 n)(pi/3) with n = (1,1,1)/sqrt(3): scalar cos(pi/3),
        # bivector -(sin(pi/3)/sqrt(3)) per component
        s3 = math.sqrt(3.0)
        b = scale(-math.pi / 3.0, hodge_dual(vector(1 / s3, 1 / s3, 1 / s3)))
        r = exp_bivector(b)
        expected = [0.5, 0, 0, 0, -math.sin(math.pi / 3) / s3,
                    -math.sin(math.pi / 3) / s3, -math.sin(math.pi / 3) / s3, 0]
        assert np.allclose(r.mv.coeffs, expected, atol=1e-15, rtol=0)

    def test_matches_matrix_exponential(self):
        # independent route: exponentiate the blade image in the 2x2 rep
        rng = np.random.default_rng(23)
        for _ in range(50):
            b = Multivector([0, 0, 0, 0, *rng.uniform(-3, 3, 3), 0])
            via_matrix = matrixqm.unrep(matrixqm.mat_exp(matrixqm.rep(b)))
            assert exp_bivector(b).mv.allclose(via_matrix, 1e-12)

    def test_series_branch_is_continuous(self):
        for mag in (1e-9, 9.9e-9, 1.01e-8, 1e-7):
            b = scale(mag, E12)
            got = exp_bivector(b).mv.coeffs
            expected = np.zeros(8)
            expected[0] = math.cos(mag)
            expected[6] = math.sin(mag)
            assert np.max(np.abs(got - expected)) < 1e-16

    def test_small_angle_series_path(self):
        b = scale(1e-10, E23)
        r = exp_bivector(b)
        assert r.mv[0] == 1.0 - 0.5e-20
        assert abs(r.mv[4] - 1e-10) < 1e-25


class TestRotorType:
    def test_rejects_odd_grades(self):
        with pytest.raises(ValueError):
            Rotor(E1)
        with pytest.raises(ValueError):
            Rotor(add(ONE, scale(1e-3, E123)))

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            Rotor(scale(2.0, ONE))
        with pytest.raises(ValueError):
            Rotor(Multivector([1.0 + 1e-6, 0, 0, 0, 0, 0, 0, 0]))

    def test_accepts_within_tolerance(self):
        Rotor(Multivector([1.0 + 1e-10, 0, 0, 0, 0, 0, 0, 0]))

    def test_group_closure(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            r = random_rotor(rng) * random_rotor(rng)
            c = r.mv.coeffs
            assert c[1] == 0.0 and c[2] == 0.0 and c[3] == 0.0 and c[7] == 0.0
            assert abs(norm(r.mv) - 1.0) <= 1e-12

    def test_reverse_is_inverse(self):
        rng = np.random.default_rng(37)
        for _ in range(50):
            r = random_rotor(rng)
            assert gp(r.mv, r.reverse().mv).allclose(ONE, 1e-14)


class TestSandwich:
    def test_quarter_turn(self):
        r = rotor_axis_angle(E3, math.pi / 2.0)
        assert sandwich(r, E1).allclose(E2, 1e-15)

    def test_identity_rotor(self):
        rng = np.random.default_rng(41)
        a = random_mv(rng)
        assert sandwich(Rotor.identity(), a) == a

    def test_preserves_vector_grade_and_norm(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            r = random_rotor(rng)
            v = vector(*rng.uniform(-10, 10, 3))
            out = sandwich(r, v)
            c = out.coeffs
            tol = 1e-12 * max(1.0, norm(v))
            for idx in (0, 4, 5, 6, 7):
                assert abs(c[idx]) <= tol
            assert abs(norm(out) - norm(v)) <= tol

    def test_reverse_orientation_undoes(self):
        rng = np.random.default_rng(47)
        r = random_rotor(rng)
        v = vector(1.0, -2.0, 0.5)
        assert sandwich(r.reverse(), sandwich(r, v)).allclose(v, 1e-13)


class TestRotorAxisAngle:
    def test_zero_angle_is_identity(self):
        assert rotor_axis_angle(E3, 0.0).mv == ONE

    def test_full_turn_is_minus_one(self):
        n = random_unit_axis(np.random.default_rng(53))
        r = rotor_axis_angle(n, 2.0 * math.pi)
        assert r.mv.allclose(-ONE, 1e-15)

    def test_rejects_non_unit_axis(self):
        with pytest.raises(ValueError):
            rotor_axis_angle(scale(2.0, E3), 1.0)

    def test_rejects_non_vector_axis(self):
        with pytest.raises(ValueError):
            rotor_axis_angle(E12, 1.0)
        with pytest.raises(ValueError):
            rotor_axis_angle(ONE, 1.0)

    def test_counterclockwise_in_dual_plane(self):
        # small positive angle about e3 pushes e1 toward +e2
        r = rotor_axis_angle(E3, 0.1)
        out = sandwich(r, E1)
        assert out[2] > 0.0
        assert out.allclose(vector(math.cos(0.1), math.sin(0.1), 0.0), 1e-15)


class TestWedge:
    def test_vector_wedge_matches_blades(self):
        assert wedge(E1, E2) == E12
        assert wedge(E2, E1) == -E12
        assert wedge(E1, E1) == ZERO

    def test_bivector_factorization_agreement(self):
        # three factorizations of the same oriented plane, pairwise within 1e-15
        s3 = math.sqrt(3.0)
        p1 = scale(1 / s3, wedge(E2 - E1, E3 - E1))
        p2 = scale(1 / s3, wedge(E3 - E2, E1 - E2))
        p3 = scale(1 / s3, wedge(E1 - E3, E2 - E3))
        target = hodge_dual(vector(1 / s3, 1 / s3, 1 / s3))
        for p in (p1, p2, p3):
            assert p.allclose(target, 1e-15)
        assert p1.allclose(p2, 1e-15) and p2.allclose(p3, 1e-15)


class TestQuaternions:
    def test_unit_embeddings(self):
        assert quaternion_embed(Quaternion(1, 0, 0, 0)) == ONE
        assert quaternion_embed(Quaternion(0, 1, 0, 0)) == -E23
        assert quaternion_embed(Quaternion(0, 0, 1, 0)) == -E31
        assert quaternion_embed(Quaternion(0, 0, 0, 1)) == -E12

    def test_hamilton_table_through_embedding(self):
        i, j, k = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)
        assert gp(quaternion_embed(i), quaternion_embed(j)) == quaternion_embed(k)
        assert gp(quaternion_embed(j), quaternion_embed(k)) == quaternion_embed(i)
        assert gp(quaternion_embed(k), quaternion_embed(i)) == quaternion_embed(j)
        assert gp(quaternion_embed(i), quaternion_embed(i)) == -ONE

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(finite_coeff, min_size=4, max_size=4),
        st.lists(finite_coeff, min_size=4, max_size=4),
    )
    def test_embedding_is_multiplicative(self, pc, qc):
        p, q = Quaternion(*pc), Quaternion(*qc)
        lhs = quaternion_embed(p * q)
        rhs = gp(quaternion_embed(p), quaternion_embed(q))
        assert lhs.allclose(rhs, 1e-12 * max(1.0, p.norm() * q.norm()))

    def test_polar_worked_example(self):
        mag, n_hat, alpha = quaternion_polar(Quaternion(1, 1, 1, 1))
        assert mag == 2.0
        s3 = math.sqrt(3.0)
        assert n_hat.allclose(vector(1 / s3, 1 / s3, 1 / s3), 1e-15)
        assert abs(alpha - 2.0 * math.pi / 3.0) <= 1e-15

    def test_polar_pure_scalars(self):
        mag, n_hat, alpha = quaternion_polar(Quaternion(5, 0, 0, 0))
        assert (mag, alpha) == (5.0, 0.0) and n_hat == E3
        mag, n_hat, alpha = quaternion_polar(Quaternion(-5, 0, 0, 0))
        assert mag == 5.0 and n_hat == E3 and alpha == 2.0 * math.pi

    def test_polar_zero_rejected(self):
        with pytest.raises(ValueError):
            quaternion_polar(Quaternion(0, 0, 0, 0))

    def test_polar_axis_is_unit_bivector(self):
        rng = np.random.default_rng(59)
        for _ in range(50):
            q = Quaternion(*rng.uniform(-5, 5, 4))
            if q.norm() == 0.0:
                continue
            _, n_hat, _ = quaternion_polar(q)
            plane = hodge_dual(n_hat)
            assert gp(plane, plane).allclose(-ONE, 1e-15)

    def test_polar_reconstruction(self):
        rng = np.random.default_rng(61)
        for _ in range(200):
            q = Quaternion(*rng.uniform(-5, 5, 4))
            if q.norm() < 1e-6:
                continue
            mag, n_hat, alpha = quaternion_polar(q)
            rebuilt = scale(mag, exp_bivector(scale(-alpha / 2.0, hodge_dual(n_hat))).mv)
            assert rebuilt.allclose(quaternion_embed(q), 1e-12 * max(1.0, mag))
            assert 0.0 <= alpha <= 2.0 * math.pi

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Quaternion(math.nan, 0, 0, 0)


class TestMultivectorType:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Multivector([math.nan, 0, 0, 0, 0, 0, 0, 0])
        with pytest.raises(ValueError):
            Multivector([math.inf, 0, 0, 0, 0, 0, 0, 0])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            Multivector([1.0, 2.0])

    def test_coefficients_are_read_only(self):
        a = Multivector([1, 2, 3, 4, 5, 6, 7, 8])
        with pytest.raises(ValueError):
            a.coeffs[0] = 9.0

    def test_json_round_trip(self):
        a = Multivector([1, -2, 3.5, 0, 0.25, -6, 7, 8])
        blob = json.dumps(a.to_json())
        assert Multivector.from_json(json.loads(blob)) == a
        assert len(a.to_json()) == 8

    def test_text_rendering(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(Multivector([1, 2, 0, 0, -0.5, 0, 0, 0])) == "1 + 2 e1 - 0.5 e23"
        assert str(-E123) == "-1 e123"
        assert len(BLADE_NAMES) == 8

    def test_operator_sugar_matches_functions(self):
        rng = np.random.default_rng(67)
        a, b = random_mv(rng), random_mv(rng)
        assert a * b == gp(a, b)
        assert a + b == add(a, b)
        assert 2.5 * a == scale(2.5, a)
        assert a - b == add(a, scale(-1.0, b))
