import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nzcod.dyadic import CC_J, CC_ONE, ComplexCoefficient, DyadicRootTwo


def triples():
    return st.builds(DyadicRootTwo,
                     st.integers(-1000, 1000), st.integers(-1000, 1000),
                     st.integers(0, 12))


class TestArithmetic:
    def test_additive_inverse(self):
        assert DyadicRootTwo(1) + DyadicRootTwo(-1) == DyadicRootTwo(0)

    def test_half_sqrt2_doubles(self):
        s = DyadicRootTwo(0, 1, 1)  # 1/sqrt(2)
        assert s + s == DyadicRootTwo(0, 1, 0)

    def test_one_plus_inv_sqrt2(self):
        x = DyadicRootTwo(1) + DyadicRootTwo(0, 1, 1)
        assert x == DyadicRootTwo(2, 1, 1)
        # float oracle for the derived value
        assert x.to_float() == pytest.approx(1 + 1 / math.sqrt(2), abs=1e-12)

    def test_inv_sqrt2_squared(self):
        s = DyadicRootTwo(0, 1, 1)
        assert s * s == DyadicRootTwo(1, 0, 1)

    def test_sqrt2_squared(self):
        r = DyadicRootTwo(0, 1, 0)
        assert r * r == DyadicRootTwo(2, 0, 0)

    def test_conjugate_product(self):
        # (1 + r2)(1 - r2) = -1, float oracle
        x = DyadicRootTwo(1, 1, 0) * DyadicRootTwo(1, -1, 0)
        assert x == DyadicRootTwo(-1)
        assert ((1 + math.sqrt(2)) * (1 - math.sqrt(2))) == pytest.approx(
            x.to_float(), abs=1e-12)

    def test_to_float(self):
        assert DyadicRootTwo(1).to_float() == 1.0
        assert DyadicRootTwo(0, 1, 1).to_float() == pytest.approx(
            0.7071067811865476, abs=1e-15)
        assert DyadicRootTwo(2, 1, 1).to_float() == pytest.approx(
            1.7071067811865476, abs=1e-15)


class TestNormalization:
    def test_canonical_form(self):
        assert DyadicRootTwo(2, 2, 1) == DyadicRootTwo(1, 1, 0)
        assert DyadicRootTwo(0, 0, 5) == DyadicRootTwo(0, 0, 0)
        assert DyadicRootTwo(4, 0, 2) == DyadicRootTwo(1, 0, 0)

    def test_negative_exponent_constructor(self):
        assert DyadicRootTwo(1, 0, -2) == DyadicRootTwo(4)

    @given(triples())
    def test_idempotent(self, x):
        again = DyadicRootTwo(x.m, x.n, x.e)
        assert (again.m, again.n, again.e) == (x.m, x.n, x.e)

    @given(triples())
    def test_float_agrees_with_raw(self, x):
        raw = (x.m + x.n * math.sqrt(2)) / (1 << x.e)
        assert x.to_float() == pytest.approx(raw, abs=1e-12, rel=1e-12)


class TestRingAxioms:
    @given(triples(), triples(), triples())
    def test_associativity_add(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(triples(), triples(), triples())
    def test_associativity_mul(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(triples(), triples())
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(triples(), triples(), triples())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(triples())
    def test_equality_is_value_equality(self, a):
        assert a - a == DyadicRootTwo(0)
        assert a * DyadicRootTwo(1) == a


class TestSqrt2Powers:
    @pytest.mark.parametrize("p", range(-6, 7))
    def test_power_values(self, p):
        assert DyadicRootTwo.sqrt2_power(p).to_float() == pytest.approx(
            math.sqrt(2) ** p, rel=1e-12)

    @pytest.mark.parametrize("sign", [1, -1])
    @pytest.mark.parametrize("p", range(-5, 6))
    def test_detection_and_inverse(self, sign, p):
        x = DyadicRootTwo.sqrt2_power(p)
        if sign < 0:
            x = -x
        assert x.as_signed_sqrt2_power() == (sign, p)
        assert x * x.inverse_scale() == DyadicRootTwo(1)

    def test_non_powers_not_detected(self):
        assert DyadicRootTwo(3).as_signed_sqrt2_power() is None
        assert DyadicRootTwo(1, 1, 0).as_signed_sqrt2_power() is None
        with pytest.raises(ValueError):
            DyadicRootTwo(3).inverse_scale()


class TestRendering:
    def test_required_tokens(self):
        assert str(DyadicRootTwo(0)) == "0"
        assert str(DyadicRootTwo(1)) == "1"
        assert str(DyadicRootTwo(-1)) == "-1"
        assert str(DyadicRootTwo(0, 1, 1)) == "s"

    def test_general_pattern(self):
        assert str(DyadicRootTwo(2, 1, 1)) == "(2+1r2)/2^1"
        assert str(DyadicRootTwo(1, 0, 1)) == "1/2^1"


class TestComplexCoefficient:
    def test_conj_and_mul_j(self):
        z = ComplexCoefficient(DyadicRootTwo(1), DyadicRootTwo(2))
        assert z.conj() == ComplexCoefficient(DyadicRootTwo(1), DyadicRootTwo(-2))
        assert z.mul_j() == ComplexCoefficient(DyadicRootTwo(-2), DyadicRootTwo(1))
        assert CC_J * CC_J == -CC_ONE

    def test_magnitude_squared(self):
        z = ComplexCoefficient(DyadicRootTwo(0, 1, 1), DyadicRootTwo(0, 1, 1))
        assert z.magnitude_squared() == DyadicRootTwo(1)

    @given(st.integers(-50, 50), st.integers(-50, 50),
           st.integers(-50, 50), st.integers(-50, 50))
    def test_product_against_complex_floats(self, a, b, c, d):
        z = ComplexCoefficient.from_ints(a, b)
        w = ComplexCoefficient.from_ints(c, d)
        assert (z * w).to_complex() == pytest.approx(
            complex(a, b) * complex(c, d), abs=1e-9)
