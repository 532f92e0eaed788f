from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from papartitions.exactarith import (
    PHI,
    PHI_INV,
    Quad5,
    TruncatedSeries,
    geom_factor,
    geometric_tail,
    pochhammer,
    quad5_arith,
    series_mul,
)

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=12
)
quad5s = st.builds(Quad5, rationals, rationals)
nonzero_quad5s = quad5s.filter(bool)


class TestQuad5:
    def test_constants(self):
        assert PHI == Quad5(Fraction(1, 2), Fraction(1, 2))
        assert PHI_INV == PHI - 1
        assert PHI * PHI_INV == 1

    def test_one_minus_r_times_one_plus_phi(self):
        assert (1 - PHI_INV) * (1 + PHI) == 1

    def test_golden_ratio_equation(self):
        assert PHI * (PHI - 1) == 1
        assert PHI ** 2 == PHI + 1

    def test_norm_pair(self):
        x = Quad5(Fraction(3, 2), Fraction(-1, 2))  # (3 - sqrt5)/2
        y = Quad5(Fraction(3, 2), Fraction(1, 2))   # (3 + sqrt5)/2
        assert x * y == 1

    def test_dispatch(self):
        a, b = Quad5(2, 1), Quad5(1, -1)
        assert quad5_arith(a, b, "add") == Quad5(3, 0)
        assert quad5_arith(a, b, "sub") == Quad5(1, 2)
        assert quad5_arith(a, b, "mul") == a * b
        assert quad5_arith(a, b, "div") * b == a
        with pytest.raises(ValueError):
            quad5_arith(a, b, "pow")

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Quad5(1) / Quad5(0)

    def test_int_and_fraction_interop(self):
        assert 2 + PHI == Quad5(Fraction(5, 2), Fraction(1, 2))
        assert Fraction(1, 2) * Quad5(2, 4) == Quad5(1, 2)
        assert (1 - PHI) == -PHI_INV

    def test_powers(self):
        assert PHI ** 0 == 1
        assert PHI ** -1 == PHI_INV
        assert PHI_INV ** 2 == Quad5(Fraction(3, 2), Fraction(-1, 2))

    @given(quad5s, quad5s, quad5s)
    @settings(max_examples=100)
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x

    @given(nonzero_quad5s)
    @settings(max_examples=100)
    def test_inverse_roundtrip(self, x):
        assert x * x.inverse() == 1
        assert (1 / x) * x == 1


class TestSeries:
    def test_mul_basic(self):
        f = TruncatedSeries([1, 1], 3)
        g = TruncatedSeries([1, -1], 3)
        assert (f * g).coeffs == [1, 0, -1, 0]

    def test_mul_identity(self):
        f = TruncatedSeries([3, 1, 4, 1, 5], 4)
        assert f * TruncatedSeries.one(4) == f

    def test_mul_telescoping(self):
        f = TruncatedSeries([1, 1, 1, 1], 3)
        g = TruncatedSeries([1, -1], 3)
        assert (f * g).coeffs == [1, 0, 0, 0]

    def test_mismatched_orders_truncate_down(self):
        f = TruncatedSeries([1, 2, 3], 2)
        g = TruncatedSeries([1, 1, 1, 1, 1], 4)
        assert (f * g).order == 2
        assert (f + g).order == 2

    def test_inverse(self):
        f = TruncatedSeries([1, 5, -2, 7], 3)
        assert f * f.inverse() == TruncatedSeries.one(3)
        g = TruncatedSeries([Fraction(2), 1, 1], 2)
        assert g * g.inverse() == TruncatedSeries.one(2)

    def test_inverse_requires_unit(self):
        with pytest.raises(ZeroDivisionError):
            TruncatedSeries([0, 1], 1).inverse()

    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=6),
        st.lists(st.integers(-5, 5), min_size=1, max_size=6),
        st.lists(st.integers(-5, 5), min_size=1, max_size=6),
    )
    @settings(max_examples=60)
    def test_mul_associative(self, a, b, c):
        fa = TruncatedSeries(a, 8)
        fb = TruncatedSeries(b, 8)
        fc = TruncatedSeries(c, 8)
        assert (fa * fb) * fc == fa * (fb * fc)
        assert fa * fb == fb * fa
        assert series_mul(fa, fb) == fa * fb


class TestGeomFactor:
    def test_geometric_expansion(self):
        s = geom_factor(1, 2, 5, "inverse_one_minus")
        assert s.coeffs == [1, 0, 1, 0, 1, 0]

    def test_all_ones(self):
        s = geom_factor(1, 1, 4, "inverse_one_minus")
        assert s.coeffs == [1, 1, 1, 1, 1]

    def test_factor_mode(self):
        s = geom_factor(PHI, 1, 3, "pochhammer_factor")
        assert s.coeffs == [1, -PHI, 0, 0]

    @pytest.mark.parametrize("c,m", [(2, 1), (Fraction(1, 3), 2), (PHI, 3)])
    def test_modes_are_mutual_inverses(self, c, m):
        inv = geom_factor(c, m, 9, "inverse_one_minus")
        fac = geom_factor(c, m, 9, "pochhammer_factor")
        assert inv * fac == TruncatedSeries.one(9)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            geom_factor(1, 1, 3, "nope")


class TestPochhammer:
    def test_minus_one_squared(self):
        s = pochhammer(-1, 2, 4)
        assert s.coeffs == [2, 2, 0, 0, 0]

    def test_zero_parameter(self):
        assert pochhammer(0, 7, 5) == TruncatedSeries.one(5)

    def test_one_parameter_vanishes(self):
        assert pochhammer(1, 1, 4) == TruncatedSeries.zero(4)
        assert pochhammer(1, 3, 4) == TruncatedSeries.zero(4)

    def test_hand_expansion(self):
        # (q; q)_2 evaluated with parameter a = q means a=1 shifted; instead
        # check (a; q)_2 = 1 - a - a q + a^2 q literally
        a = Fraction(1, 2)
        s = pochhammer(a, 2, 3)
        assert s.coeffs == [1 - a, -a + a * a, 0, 0]

    @pytest.mark.parametrize("a", [Fraction(1, 2), PHI_INV, -PHI])
    def test_stabilization(self, a):
        order = 12
        stable = pochhammer(a, order + 1, order)
        for n in (order + 2, order + 9, None):
            assert pochhammer(a, n, order) == stable


class TestGeometricTail:
    def test_golden_tail(self):
        assert geometric_tail(PHI_INV, 1) == PHI

    def test_half(self):
        assert geometric_tail(Fraction(1, 2), 1) == 1

    def test_zero_ratio(self):
        assert geometric_tail(Quad5(0), 3) == 0

    def test_matches_partial_sums(self):
        r = Fraction(1, 3)
        closed = geometric_tail(r, 4)
        partial = sum(r ** k for k in range(4, 40))
        assert abs(closed - partial) < Fraction(1, 10 ** 15)

    def test_ratio_one_rejected(self):
        with pytest.raises(ZeroDivisionError):
            geometric_tail(Fraction(1), 1)
