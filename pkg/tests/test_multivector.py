"""Sparse exact multivectors: arithmetic, involutions, inverses, codecs."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cl07.blades import N_BLADES, PSEUDOSCALAR
from cl07.multivector import (
    Multivector,
    Singular,
    coerce_rational,
    conjugation,
    gp,
    grade_involution,
    grade_project,
    grade_project_01,
    inverse,
    psi,
    reversion,
)


def mv(terms):
    return Multivector(terms)


small_mvs = st.dictionaries(
    st.integers(min_value=0, max_value=127),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(Multivector)


class TestCoercion:
    def test_int_stays_int(self):
        assert coerce_rational(3) == 3
        assert type(coerce_rational(3)) is int

    def test_integral_fraction_collapses(self):
        v = coerce_rational(Fraction(4, 2))
        assert v == 2 and type(v) is int

    def test_fraction_kept_exact(self):
        assert coerce_rational(Fraction(3, 2)) == Fraction(3, 2)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            coerce_rational(0.5)
        with pytest.raises(TypeError):
            Multivector.scalar(0.5)


class TestProduct:
    def test_vector_square(self):
        e1 = Multivector.generator(1)
        assert gp(e1, e1) == Multivector.scalar(-1)

    def test_bivector_contraction(self):
        e12 = Multivector.blade(0b11, 1)
        e23 = Multivector.blade(0b110, 1)
        # e1 e2 e2 e3 = -e1 e3
        assert gp(e12, e23) == Multivector.blade(0b101, -1)

    def test_scalar_passthrough(self):
        x = mv({0b1010: 3, 0: 2})
        assert gp(Multivector.scalar(5), x) == x.scale(5)

    def test_operator_is_gp(self):
        x = mv({0b11: 2})
        y = mv({0b110: Fraction(1, 2)})
        assert x * y == gp(x, y)


class TestInvolutions:
    @given(x=small_mvs, y=small_mvs)
    @settings(max_examples=60, deadline=None)
    def test_reversion_antihomomorphism(self, x, y):
        assert reversion(gp(x, y)) == gp(reversion(y), reversion(x))

    @given(x=small_mvs, y=small_mvs)
    @settings(max_examples=60, deadline=None)
    def test_involution_homomorphism(self, x, y):
        assert grade_involution(gp(x, y)) == gp(
            grade_involution(x), grade_involution(y))

    @given(x=small_mvs)
    @settings(max_examples=60, deadline=None)
    def test_conjugation_is_composite(self, x):
        assert conjugation(x) == reversion(grade_involution(x))

    @given(x=small_mvs)
    @settings(max_examples=60, deadline=None)
    def test_involutions_are_involutive(self, x):
        assert reversion(reversion(x)) == x
        assert grade_involution(grade_involution(x)) == x
        assert conjugation(conjugation(x)) == x


class TestGradeProjection:
    def test_projection_partition(self):
        x = mv({0: 1, 0b1: 2, 0b11: 3, PSEUDOSCALAR: 4})
        total = Multivector.zero()
        for k in range(8):
            total = total + grade_project(x, k)
        assert total == x

    def test_paravector_projection(self):
        x = mv({0: 1, 0b1: 2, 0b11: 3})
        assert grade_project_01(x) == mv({0: 1, 0b1: 2})


class TestInverse:
    def test_all_blades_two_sided(self):
        one = Multivector.scalar(1)
        for m in range(N_BLADES):
            b = Multivector.blade(m, 1)
            bi = inverse(b)
            assert gp(bi, b) == one
            assert gp(b, bi) == one

    def test_general_element(self):
        x = mv({0: 1, 0b1: 2, 0b1110: 1})
        xi = inverse(x)
        one = Multivector.scalar(1)
        assert gp(x, xi) == one
        assert gp(xi, x) == one

    def test_zero_is_singular(self):
        with pytest.raises(Singular):
            inverse(Multivector.zero())

    def test_one_plus_top_is_singular(self):
        # (1 + w)(1 - w) = 1 - w^2 = 0 since the top blade squares to +1
        x = Multivector.scalar(1) + Multivector.blade(PSEUDOSCALAR, 1)
        with pytest.raises(Singular):
            inverse(x)


class TestPsi:
    def test_trivector_support(self):
        p = psi()
        assert sorted(p.support()) == [11, 22, 44, 49, 69, 88, 98]
        assert all(p.coeff(m) == 1 for m in p.support())

    def test_projected_product_recovers_unit(self):
        # <e1 e2 psi>_{0,1} = -e4
        got = grade_project_01(gp(Multivector.blade(0b11, 1), psi()))
        assert got == Multivector.generator(4).scale(-1)


class TestCodecs:
    cases = [
        Multivector.zero(),
        Multivector.scalar(Fraction(-7, 3)),
        mv({0: 1, 0b1: -2, 0b1100101: Fraction(5, 4)}),
        Multivector.blade(PSEUDOSCALAR, -1),
    ]

    @pytest.mark.parametrize("x", cases)
    def test_text_round_trip(self, x):
        assert Multivector.from_text(x.to_text()) == x

    @pytest.mark.parametrize("x", cases)
    def test_json_round_trip(self, x):
        assert Multivector.from_json_dict(x.to_json_dict()) == x

    @given(x=small_mvs)
    @settings(max_examples=80, deadline=None)
    def test_text_round_trip_random(self, x):
        assert Multivector.from_text(x.to_text()) == x
