import random
from fractions import Fraction

import mpmath
import pytest

from cored_hexagons.exactnum import omega3, omega6
from cored_hexagons.formulas import (
    FORMULA_TAGS,
    FormulaDomainError,
    OMEGA_CASES,
    andrews_rhs,
    asymptotic_k,
    conjecture_rhs,
    count_cored_formula,
    lemma_rhs,
    macmahon_box,
    om3_rhs,
    om6_rhs,
    rhs_case10,
    rhs_omega_det,
    watson_3f2_closed,
    watson_lhs,
    watson_pair,
    zare1_rhs,
)
from cored_hexagons.hypergeom import PochhammerZeroError
from cored_hexagons.lgv import (
    build_cored_matrix,
    build_n6_matrix,
    build_omega_shift,
    det_fraction_free,
    transformed_cored_matrix,
)
from cored_hexagons.tilings import CoredHexagon, count_weighted


class TestMacMahon:
    def test_examples(self):
        assert macmahon_box(0, 5, 7) == 1
        assert macmahon_box(1, 1, 1) == 2
        assert macmahon_box(2, 2, 2) == 20

    def test_specialization(self):
        for a in range(7):
            for b in range(7):
                for c in range(7):
                    if b % 2 != c % 2:
                        continue
                    assert count_cored_formula(a, b, c, 0) == macmahon_box(a, b, c)


class TestCountFormulas:
    def test_trivial_cases(self):
        assert count_cored_formula(0, 0, 0, 9) == 1
        assert count_cored_formula(1, 1, 1, 0) == 2

    def test_all_odd_signed_is_zero(self):
        for a, b, c in ((1, 1, 1), (3, 1, 1), (3, 3, 3)):
            for m in (0, 1, 2):
                assert count_cored_formula(a, b, c, m, signed=True) == 0

    def test_parity_dispatch_rejects_bad_labels(self):
        with pytest.raises(FormulaDomainError):
            count_cored_formula(1, 2, 3, 1)

    @pytest.mark.parametrize(
        "params",
        [(3, 5, 1, 2), (2, 5, 1, 2), (2, 2, 2, 1), (1, 2, 2, 1), (3, 2, 2, 1), (1, 0, 0, 1)],
    )
    def test_triangle_against_determinant_and_oracle(self, params):
        a, b, c, m = params
        signed = m % 2 == 1
        eps = 0 if a % 2 == b % 2 else Fraction(1, 2)
        value = count_cored_formula(a, b, c, m, signed=signed)
        assert value == det_fraction_free(build_cored_matrix(a, b, c, m, eps))
        weight = "minus1" if signed else "one"
        assert value == count_weighted(CoredHexagon(a, b, c, m), weight)


class TestOmegaDets:
    def test_andrews_small(self):
        assert andrews_rhs(0, 3) == 1
        assert andrews_rhs(1, 5) == 2
        assert andrews_rhs(2, 4) == 9  # m + 5

    def test_zare1(self):
        assert zare1_rhs(3, 2) == 0
        assert zare1_rhs(2, 4) == -5  # -(m+1)

    def test_om_one_by_one(self):
        assert om3_rhs(1, 6) == 1 + omega3()
        assert om6_rhs(1, 6) == 1 + omega6()

    @pytest.mark.parametrize("case", OMEGA_CASES)
    def test_matches_determinant(self, case):
        omegas = {
            "one": 1,
            "minus1": -1,
            "third": omega3(),
            "sixth": omega6(),
        }
        for a in range(7):
            for m in range(7):
                det = det_fraction_free(build_omega_shift(a, m, omegas[case]))
                assert det == rhs_omega_det(a, m, case), (a, m, case)


class TestCase10:
    def test_examples(self):
        assert rhs_case10(0, 5) == 1
        assert rhs_case10(1, 0) == 2
        assert rhs_case10(2, 0) == det_fraction_free(build_n6_matrix(2, 0))

    def test_all_parity_branches(self):
        for a in range(5):
            for m in range(4):
                det = det_fraction_free(build_n6_matrix(a, m))
                assert rhs_case10(a, m) == det, (a, m)


class TestLemmas:
    def test_odd_odd_unshifted_is_zero(self):
        assert lemma_rhs(3, 2, 2, 1) == 0
        assert lemma_rhs(1, 8, 4, 3) == 0

    @pytest.mark.parametrize("shifted", [False, True])
    def test_matches_transformed_determinant(self, shifted):
        for a in range(4):
            for m in range(4):
                for b, c in ((0, 0), (1, 3), (2, 2), (4, 0)):
                    lhs = lemma_rhs(a, b, c, m, shifted)
                    rhs = det_fraction_free(transformed_cored_matrix(a, b, c, m, shifted))
                    assert lhs == rhs, (a, b, c, m, shifted)

    def test_polynomial_identity_at_rational_arguments(self):
        rng = random.Random(7)
        for _ in range(25):
            a, m = rng.randint(0, 3), rng.randint(0, 3)
            shifted = rng.random() < 0.5
            b = Fraction(rng.randint(-8, 8), rng.choice((1, 2, 3)))
            c = Fraction(rng.randint(-8, 8), rng.choice((1, 2, 3)))
            assert lemma_rhs(a, b, c, m, shifted) == det_fraction_free(
                transformed_cored_matrix(a, b, c, m, shifted)
            )


class TestAsymptotics:
    def test_deterministic(self):
        k1 = asymptotic_k(1, 1, 1, 1)
        k2 = asymptotic_k(1, 1, 1, 1)
        assert mpmath.nstr(k1, 45) == mpmath.nstr(k2, 45)

    def test_precision_agreement(self):
        k50 = asymptotic_k(2, 2, 2, 1, digits=50)
        k30 = asymptotic_k(2, 2, 2, 1, digits=30)
        assert abs(k50 - k30) < mpmath.mpf(10) ** (-25)

    def test_convergence_with_zero_core(self):
        k = asymptotic_k(1, 1, 1, 0)
        devs = []
        with mpmath.workdps(50):
            for n in (4, 8, 16):
                count = count_cored_formula(n, n, n, 0)
                devs.append(abs(mpmath.log(mpmath.mpf(int(count))) / (n * n) - k))
        assert devs[0] > devs[1] > devs[2]


class TestConjectures:
    def test_match_epsilon_determinants(self):
        for a, b, c in ((2, 2, 2), (1, 1, 1), (3, 1, 1), (2, 4, 2)):
            for m in (0, 2, 4):
                try:
                    rhs = conjecture_rhs(1, a, b, c, m)
                except FormulaDomainError:
                    continue
                assert rhs == det_fraction_free(build_cored_matrix(a, b, c, m, 1))

    def test_three_halves_case(self):
        assert conjecture_rhs(2, 1, 2, 2, 2) == det_fraction_free(
            build_cored_matrix(1, 2, 2, 2, Fraction(3, 2))
        )

    def test_m_zero_is_placement_free(self):
        # with no core the epsilon shift cannot matter
        assert conjecture_rhs(1, 2, 2, 2, 0) == macmahon_box(2, 2, 2)

    def test_parity_checks(self):
        with pytest.raises(FormulaDomainError):
            conjecture_rhs(1, 1, 2, 2, 2)
        with pytest.raises(FormulaDomainError):
            conjecture_rhs(2, 2, 2, 2, 2)


class TestPlanePartitionSpecialization:
    def test_signed_diagonal_count_over_plane_partitions(self):
        # at m = 0 the cyclic (-1)^n count is the sum of (-1)^(m1) over
        # cyclically symmetric plane partitions, against the closed form
        from cored_hexagons.tilings import (
            build_region,
            enumerate_cyclic_tilings,
            plane_partition_diagonal_count,
            tiling_to_plane_partition,
        )

        for a in range(1, 5):
            region = build_region(CoredHexagon(a, a, a, 0))
            total = 0
            for tiling in enumerate_cyclic_tilings(region):
                pp = tiling_to_plane_partition(tiling, region)
                total += (-1) ** plane_partition_diagonal_count(pp)
            assert total == rhs_omega_det(a, 0, "minus1"), a


class TestWatson:
    def test_single_sum_is_watson_3f2(self):
        for M in (0, 2, 4, 6):
            B, C = Fraction(5, 3), Fraction(7, 2)
            assert watson_lhs("W1", 1, M, B, C) == watson_3f2_closed(M, B, C)

    def test_both_odd_vanishes(self):
        lhs, rhs = watson_pair("W1", 3, 3, Fraction(1), Fraction(2))
        assert lhs == rhs == 0
        lhs, rhs = watson_pair("W1", 1, 5, Fraction(1, 2), Fraction(5, 2))
        assert lhs == rhs == 0

    def test_pole_is_named(self):
        with pytest.raises(PochhammerZeroError):
            watson_pair("W1", 2, 4, Fraction(1), Fraction(0))

    @pytest.mark.parametrize("variant", ["W1", "W2", "W3"])
    def test_random_branches(self, variant):
        rng = random.Random(hash(variant) % 997)
        checked = 0
        attempts = 0
        while checked < 30 and attempts < 3000:
            attempts += 1
            a = rng.randint(1, 3)
            M = rng.randint(a, 6)
            B = Fraction(rng.randint(-20, 20), rng.choice((1, 2, 3)))
            C = Fraction(rng.randint(-20, 20), rng.choice((1, 2, 3)))
            try:
                lhs, rhs = watson_pair(variant, a, M, B, C)
            except (PochhammerZeroError, ZeroDivisionError):
                continue
            assert lhs == rhs, (variant, a, M, B, C)
            checked += 1
        assert checked == 30


def test_formula_tags_are_stable():
    assert len(FORMULA_TAGS) == 16
    assert "Case10" in FORMULA_TAGS and "AsymptoticK" in FORMULA_TAGS
