import os
import random
from fractions import Fraction

import pytest

from cored_hexagons.exactnum import CycloElement, THIRD, omega3, omega6
from cored_hexagons.lgv import (
    ExactMatrix,
    RING_INTEGER,
    RING_RATIONAL,
    build_B,
    build_VW,
    build_cored_matrix,
    build_n6_matrix,
    build_omega_shift,
    cored_det_transform,
    det_fraction_free,
    identity_matrix,
    laplace_two_block,
    matrix_add,
    matrix_mul,
    matrix_scale,
    matrix_to_text,
    principal_minor_sum,
    th10_pair,
    transformed_cored_matrix,
    zn_factor_pair,
)
from cored_hexagons.tilings import CoredHexagon, count_weighted

DATA = os.path.join(os.path.dirname(__file__), "data")


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


class TestDeterminant:
    def test_empty_matrix(self):
        assert det_fraction_free(ExactMatrix.of([])) == 1

    def test_identity(self):
        assert det_fraction_free(identity_matrix(5)) == 1

    def test_small_example(self):
        assert det_fraction_free(ExactMatrix.of([[2, 1], [1, 3]])) == 5

    def test_matches_cofactor_expansion(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det_fraction_free(ExactMatrix.of(rows)) == cofactor_det(rows)

    def test_rational_entries(self):
        rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(2, 7)]]
        assert det_fraction_free(ExactMatrix.of(rows)) == cofactor_det(rows)

    def test_singular(self):
        assert det_fraction_free(ExactMatrix.of([[1, 2], [2, 4]])) == 0

    def test_cyclo_diagonal(self):
        w = omega3()
        zero = CycloElement.of(THIRD, 0)
        m = ExactMatrix.of([[w, zero], [zero, w]])
        assert det_fraction_free(m) == CycloElement.of(THIRD, -1, -1)

    def test_needs_square(self):
        with pytest.raises(ValueError):
            det_fraction_free(ExactMatrix.of([[1, 2, 3], [4, 5, 6]]))


class TestBuilders:
    def test_build_B(self):
        assert build_B(1, 7).rows == ((1,),)
        assert build_B(2, 0).rows == ((1, 1), (1, 2))
        assert det_fraction_free(build_B(0, 3)) == 1

    def test_omega_shift_examples(self):
        assert det_fraction_free(build_omega_shift(2, 4, 1)) == 9
        assert det_fraction_free(build_omega_shift(2, 4, -1)) == -5
        one_by_one = build_omega_shift(1, 3, omega6())
        assert one_by_one.rows[0][0] == omega6() + 1

    def test_cored_matrix_parity_checks(self):
        with pytest.raises(ValueError):
            build_cored_matrix(2, 3, 2, 1)
        with pytest.raises(ValueError):
            build_cored_matrix(2, 2, 2, 1, epsilon=Fraction(1, 2))

    def test_cored_matrix_b_c_zero(self):
        # one tiling: determinant 1 at matching epsilon
        assert det_fraction_free(build_cored_matrix(2, 0, 0, 2, 0)) == 1
        for a, m in ((1, 2), (3, 2), (3, 4)):
            det = det_fraction_free(build_cored_matrix(a, 0, 0, m, Fraction(1, 2)))
            assert det == 1

    def test_cored_matrix_b_c_one(self):
        from cored_hexagons.exactnum import binomial

        for a in (1, 3, 5):
            for m in (0, 2):
                det = det_fraction_free(build_cored_matrix(a, 1, 1, m, 0))
                assert det == 2 * binomial(m + 1 + (a - 1) // 2, (a - 1) // 2)

    def test_n6_matrix(self):
        assert build_n6_matrix(1, 0).rows == ((2,),)
        assert det_fraction_free(build_n6_matrix(2, 0)) == count_weighted(
            CoredHexagon(2, 2, 2, 0), "minus1-n6"
        )

    def test_serialization(self):
        text = matrix_to_text(build_B(2, 0))
        assert text == "ring integer 2 2\n1 1\n1 2\n"


class TestTransform:
    @pytest.mark.parametrize(
        "params", [(2, 2, 2, 2, False), (1, 3, 1, 2, False), (2, 5, 1, 2, True), (1, 2, 2, 3, True)]
    )
    def test_prefactor_times_det(self, params):
        a, b, c, m, shifted = params
        eps = Fraction(1, 2) if shifted else 0
        raw = det_fraction_free(build_cored_matrix(a, b, c, m, eps))
        prefactor, transformed = cored_det_transform(a, b, c, m, shifted)
        assert prefactor * Fraction(det_fraction_free(transformed)) == raw

    def test_transformed_matrix_polynomial_in_b_c(self):
        m1 = transformed_cored_matrix(2, Fraction(1, 2), Fraction(-3, 2), 1)
        assert m1.ring in (RING_RATIONAL, RING_INTEGER)


class TestLaplace:
    def test_full_block_is_plain_determinant(self):
        m = build_B(3, 2)
        assert laplace_two_block(m, 3) == det_fraction_free(m)

    def test_random_cross_check(self):
        rng = random.Random(11)
        for _ in range(10):
            rows = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
            m = ExactMatrix.of(rows)
            assert laplace_two_block(m, 1) == det_fraction_free(m)

    def test_cored_matrix_expansion(self):
        m = build_cored_matrix(2, 2, 2, 2, 0)
        assert laplace_two_block(m, 2) == det_fraction_free(m)


class TestZn:
    def test_odd_n_vanishes(self):
        for n in (1, 3, 5):
            lhs, rhs = zn_factor_pair(n, Fraction(1), Fraction(1, 2))
            assert lhs == rhs == 0

    def test_even_n_factors(self):
        lhs, rhs = zn_factor_pair(2, 1, 1)
        assert lhs == rhs

    def test_specialization_to_shifted_identity(self):
        # at x = 1, mu = m/2 the determinant is det(-I + B(n, m))
        for n, m in ((2, 4), (4, 2)):
            lhs, _ = zn_factor_pair(n, 1, Fraction(m, 2))
            assert lhs == det_fraction_free(build_omega_shift(n, m, -1))

    def test_th10(self):
        lhs, rhs = th10_pair(3, 2, 1)
        assert lhs == rhs
        assert th10_pair(0, 2, 3) == (1, 1)
        lhs, rhs = th10_pair(1, 2, 1)
        assert lhs == rhs == Fraction(2, 2 * 1)

    def test_th10_rejects_bad_args(self):
        with pytest.raises(ValueError):
            th10_pair(2, -1, 3)
        with pytest.raises(ValueError):
            th10_pair(1, 0, 0)


class TestVW:
    def test_even_even_entries_agree(self):
        V, W = build_VW(6, 4)
        for i in range(3):
            for j in range(3):
                assert V.rows[2 * i][2 * j] == W.rows[2 * i][2 * j]

    def test_reduction_minus_one(self):
        V, W = build_VW(2, 0)
        lhs = det_fraction_free(matrix_add(matrix_scale(V, -1), W))
        assert lhs == det_fraction_free(build_omega_shift(2, 0, -1)) == -1

    def test_reduction_sixth_root(self):
        n, m = 3, 2
        V, W = build_VW(n, m)
        w = omega6()
        Wc = ExactMatrix.of(
            [[CycloElement.of(w.ring, Fraction(v)) for v in row] for row in W.rows]
        )
        lhs = det_fraction_free(matrix_add(matrix_scale(V, w), Wc))
        assert lhs == det_fraction_free(build_omega_shift(n, m, w))

    def test_odd_m_gives_rational_entries(self):
        V, W = build_VW(2, 1)
        assert V.ring == RING_RATIONAL


class TestBlocks:
    def test_principal_minors(self):
        rng = random.Random(3)
        m = ExactMatrix.of([[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)])
        assert principal_minor_sum(m) == det_fraction_free(
            matrix_add(identity_matrix(4), m)
        )

    def test_det3_and_det6(self):
        for a, m in ((3, 2), (4, 1)):
            B = build_B(a, m)
            B3 = matrix_mul(matrix_mul(B, B), B)
            eye = identity_matrix(a)
            lhs = det_fraction_free(matrix_add(eye, B3))
            rhs = det_fraction_free(matrix_add(eye, B)) * det_fraction_free(
                build_omega_shift(a, m, omega3())
            ).norm()
            assert lhs == rhs
            lhs = det_fraction_free(matrix_add(matrix_scale(eye, -1), B3))
            rhs = det_fraction_free(
                matrix_add(matrix_scale(eye, -1), B)
            ) * det_fraction_free(build_omega_shift(a, m, omega6())).norm()
            assert lhs == rhs


class TestRootSpotChecks:
    def test_transformed_det_vanishes_at_negative_b(self):
        # the transformed determinant vanishes at b = -e for e = a (mod 2),
        # 1 <= e <= min(a, m), at sampled integer c
        rng = random.Random(23)
        for a, m in ((2, 2), (3, 3), (2, 4)):
            for e in range(1, min(a, m) + 1):
                if e % 2 != a % 2:
                    continue
                c = rng.randint(0, 6)
                det = det_fraction_free(transformed_cored_matrix(a, -e, c, m))
                assert det == 0, (a, m, e, c)

    def test_odd_odd_transformed_det_is_zero(self):
        assert det_fraction_free(transformed_cored_matrix(3, 4, 2, 1)) == 0
        assert det_fraction_free(transformed_cored_matrix(1, 2, 6, 3)) == 0
