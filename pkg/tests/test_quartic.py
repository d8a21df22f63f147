import random
from fractions import Fraction as F

import pytest

from chatelet.quartic import (
    BiquadraticQuartic,
    QuarticPoly,
    biquadratic_irreducible,
    evaluate,
    factorization_oracle,
    homogenize_value_at_infinity,
    is_separable,
    real_root_count,
)

P0 = QuarticPoly((-6, 0, 5, 0, -1))  # (x^2-2)(3-x^2)
PINF = QuarticPoly((-1, 0, 3, 0, 2))  # 2x^4+3x^2-1


class TestEvaluate:
    def test_spec_examples(self):
        assert evaluate(P0, F(3, 2)) == F(3, 16)
        assert evaluate(PINF, 0) == -1

    def test_constant_term(self):
        rng = random.Random(2)
        for _ in range(50):
            cs = [F(rng.randrange(-9, 10)) for _ in range(5)]
            assert evaluate(QuarticPoly(tuple(cs)), 0) == cs[0]

    def test_from_leading_order(self):
        p = QuarticPoly.from_leading(2, 0, 3, 0, -1)
        assert p == PINF


class TestInfinity:
    def test_spec_examples(self):
        assert homogenize_value_at_infinity(PINF) == 2
        assert homogenize_value_at_infinity(P0) == -1
        cubic = QuarticPoly((1, 0, 0, 1, 0))
        assert homogenize_value_at_infinity(cubic) == 0


class TestSeparable:
    def test_spec_examples(self):
        assert is_separable(P0)
        assert is_separable(PINF)
        squared = QuarticPoly((1, 0, -2, 0, 1))  # (x^2-1)^2
        assert not is_separable(squared)

    def test_agrees_with_discriminant(self):
        rng = random.Random(9)
        tested = 0
        while tested < 200:
            cs = tuple(F(rng.randrange(-30, 31)) for _ in range(5))
            p = QuarticPoly(cs)
            if p.degree < 2:
                continue
            assert is_separable(p) == (p.discriminant() != 0)
            tested += 1

    def test_biquadratic_discriminant_closed_form(self):
        # disc(Ax^4 + Bx^2 + C) = 16 A C (B^2 - 4AC)^2, cross-check Sylvester
        rng = random.Random(10)
        for _ in range(100):
            A = F(rng.choice([a for a in range(-9, 10) if a]))
            B = F(rng.randrange(-9, 10))
            C = F(rng.randrange(-9, 10))
            p = QuarticPoly((C, 0, B, 0, A))
            assert p.discriminant() == 16 * A * C * (B * B - 4 * A * C) ** 2


class TestRealRoots:
    def test_counts(self):
        assert real_root_count(P0) == 4  # +-sqrt2, +-sqrt3
        assert real_root_count(PINF) == 2  # x^2 = (-3+sqrt17)/4 only
        assert real_root_count(QuarticPoly((1, 0, 0, 0, 1))) == 0  # x^4+1
        assert real_root_count(QuarticPoly((-1, 0, 0, 0, -1))) == 0  # -x^4-1
        assert real_root_count(QuarticPoly((0, 1, 0, 0, 0))) == 1  # x

    def test_against_numpy_style_samples(self):
        # cross-check via exact rational root polynomials
        p = QuarticPoly.from_leading(1, 0, -5, 0, 4)  # (x^2-1)(x^2-4)
        assert real_root_count(p) == 4


class TestBiquadraticIrreducible:
    def test_spec_examples(self):
        assert biquadratic_irreducible(BiquadraticQuartic(2, 3, -1))
        assert not biquadratic_irreducible(BiquadraticQuartic(1, 0, -1))
        assert biquadratic_irreducible(BiquadraticQuartic(287, 437, -150))

    def test_zero_leading_rejected(self):
        with pytest.raises(ValueError):
            biquadratic_irreducible(BiquadraticQuartic(0, 1, 1))

    def test_criterion_inconclusive_cases_fall_to_oracle(self):
        # b^2-4ac is a square but the quartic is irreducible: x^4 + 1
        q = BiquadraticQuartic(1, 0, 1)
        assert q.quadratic_discriminant() == -4
        assert biquadratic_irreducible(q)
        # ac square, reducible: x^4 - 2x^2 + 1 = (x^2-1)^2
        assert not biquadratic_irreducible(BiquadraticQuartic(1, -2, 1))


class TestFactorizationOracle:
    def test_x4_minus_1(self):
        fac = factorization_oracle(QuarticPoly((-1, 0, 0, 0, 1)))
        assert fac.unit == 1
        assert fac.factors == ((-1, 1), (1, 1), (1, 0, 1))

    def test_p0_splits(self):
        fac = factorization_oracle(P0)
        assert fac.unit == -1
        assert fac.factors == ((-3, 0, 1), (-2, 0, 1))

    def test_pinf_irreducible(self):
        fac = factorization_oracle(PINF)
        assert len(fac.factors) == 1

    def test_rational_coefficients(self):
        p = QuarticPoly((F(-1, 3), 0, 0, 0, F(1, 3)))  # (x^4-1)/3
        fac = factorization_oracle(p)
        assert fac.unit == F(1, 3)
        assert fac.product() == p

    def test_repeated_roots(self):
        p = QuarticPoly((1, 0, -2, 0, 1))  # (x-1)^2 (x+1)^2
        fac = factorization_oracle(p)
        assert sorted(fac.factors) == [(-1, 1), (-1, 1), (1, 1), (1, 1)]

    def test_cubic_and_linear(self):
        # x^4 - 2x^3 = x^3 (x - 2)
        p = QuarticPoly((0, 0, 0, -2, 1))
        fac = factorization_oracle(p)
        assert fac.factors == ((-2, 1), (0, 1), (0, 1), (0, 1))

    def test_general_quadratic_split(self):
        # (x^2 + x + 1)(x^2 - x + 2) has no rational roots and cross terms
        prod = QuarticPoly((2, 1, 2, 0, 1))
        fac = factorization_oracle(prod)
        assert sorted(fac.factors) == [(1, 1, 1), (2, -1, 1)]

    def test_irreducible_with_odd_terms(self):
        fac = factorization_oracle(QuarticPoly((1, 1, 0, 0, 1)))  # x^4 + x + 1
        assert fac.factors == ((1, 1, 0, 0, 1),)

    def test_product_reconstruction_random(self):
        rng = random.Random(17)
        tested = 0
        while tested < 150:
            cs = tuple(F(rng.randrange(-12, 13)) for _ in range(5))
            p = QuarticPoly(cs)
            if p.is_zero or p.degree < 1:
                continue
            fac = factorization_oracle(p)
            assert fac.product() == p
            tested += 1

    def test_known_product_roundtrip(self):
        rng = random.Random(23)
        for _ in range(100):
            a = [rng.randrange(-5, 6) for _ in range(2)]
            b = [rng.randrange(-5, 6) for _ in range(2)]
            # (x^2 + a1 x + a0)(x^2 + b1 x + b0)
            q1 = (a[0], a[1], 1)
            q2 = (b[0], b[1], 1)
            coeffs = [
                q1[0] * q2[0],
                q1[0] * q2[1] + q1[1] * q2[0],
                q1[0] * q2[2] + q1[1] * q2[1] + q1[2] * q2[0],
                q1[1] * q2[2] + q1[2] * q2[1],
                1,
            ]
            p = QuarticPoly(tuple(F(c) for c in coeffs))
            fac = factorization_oracle(p)
            assert fac.product() == p
            assert all(len(f) < 5 for f in fac.factors)  # it must split
