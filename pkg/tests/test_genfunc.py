from fractions import Fraction

import pytest

from papartitions import (
    IntegralityError,
    heine_check,
    is_pa_smallest_odd,
    pa_series_identity_chain,
    series_G1,
    series_G2,
    series_pa_o,
)
from papartitions.exactarith import PHI, PHI_INV, Quad5, TruncatedSeries
from papartitions.genfunc import _g2_quad5_series, heine_lhs, heine_rhs

KNOWN_COUNTS = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88]


class TestG1:
    def test_known_values(self):
        assert series_G1(15).coefficients == KNOWN_COUNTS

    def test_c15(self):
        assert series_G1(15).coefficient(15) == 88

    def test_constant_term_zero(self):
        assert series_G1(8).constant_term == 0

    def test_matches_enumeration(self, pa_sets):
        table = series_G1(40).table()
        for n in range(1, 41):
            assert table[n] == len(pa_sets[n])

    def test_strictly_increasing(self, g1_2000):
        cs = g1_2000.coefficients
        assert all(a < b for a, b in zip(cs, cs[1:]))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            series_G1(0)


class TestG2:
    def test_constant_term_zero(self):
        assert series_G2(6).constant_term == 0

    def test_c6(self):
        assert series_G2(6).coefficient(6) == 8

    def test_matches_g1(self):
        assert series_G2(60).coefficients == series_G1(60).coefficients

    def test_integrality_flag(self):
        assert series_G2(20).irrational_residue_zero is True

    def test_sqrt5_parts_cancel_exactly(self):
        for c in _g2_quad5_series(25):
            q = Quad5._coerce(c)
            assert q.b == 0
            assert q.a.denominator == 1

    def test_projection_rejects_irrational(self):
        # feed the projection a coefficient with a surviving sqrt5 part
        with pytest.raises(IntegralityError):
            bad = [Quad5(0), PHI]
            from papartitions import genfunc

            orig = genfunc._g2_quad5_series
            genfunc._g2_quad5_series = lambda order: bad
            try:
                series_G2(1)
            finally:
                genfunc._g2_quad5_series = orig


class TestPaOdd:
    def test_first_five_against_enumeration(self, pa_sets):
        got = series_pa_o(5).coefficients
        expected = [
            sum(1 for p in pa_sets[n] if is_pa_smallest_odd(p))
            for n in range(1, 6)
        ]
        assert expected == [1, 1, 3, 2, 5]
        assert got == expected

    def test_constant_term_one(self):
        assert series_pa_o(3).constant_term == 1

    def test_c4_counts_two_partitions(self, pa_sets):
        odd_smallest = {p for p in pa_sets[4] if is_pa_smallest_odd(p)}
        assert odd_smallest == {(2, 1, 1), (1, 1, 1, 1)}
        assert series_pa_o(4).coefficient(4) == 2

    def test_matches_enumeration_to_40(self, pa_sets):
        table = series_pa_o(40).table()
        for n in range(1, 41):
            assert table[n] == sum(
                1 for p in pa_sets[n] if is_pa_smallest_odd(p)
            )


class TestHeine:
    def test_specialization(self):
        assert heine_check(PHI_INV, -PHI, Quad5(-1), 50)

    def test_order_zero(self):
        assert heine_check(Quad5(Fraction(1, 3)), Quad5(2), Quad5(Fraction(1, 5)), 0)

    def test_zero_a(self):
        assert heine_check(Quad5(0), -PHI, Quad5(-1), 30)

    def test_generic_parameters(self):
        a = Quad5(Fraction(1, 2), Fraction(1, 3))
        b = Quad5(Fraction(-3, 2))
        c = Quad5(Fraction(1, 2))
        assert heine_check(a, b, c, 25)

    def test_detects_perturbation(self):
        # same parameters on both sides is an identity; perturbing one side
        # must break the coefficientwise agreement
        a, b, c = PHI_INV, -PHI, Quad5(-1)
        lhs = heine_lhs(a, b, c, 12)
        rhs = heine_rhs(a, b, c, 12)
        assert lhs == rhs
        assert not (lhs + TruncatedSeries.term(1, 5, 12)) == rhs

    @pytest.mark.parametrize(
        "a,b,c",
        [
            (Quad5(1), Quad5(0), Quad5(2)),       # b = 0
            (Quad5(1), Quad5(2), Quad5(1)),       # c = 1
            (Quad5(1), Quad5(3), Quad5(3)),       # c/b = 1
        ],
    )
    def test_domain_errors(self, a, b, c):
        with pytest.raises(ValueError):
            heine_check(a, b, c, 5)


class TestIdentityChain:
    def test_all_links_pass(self):
        report = pa_series_identity_chain(50)
        assert report.all_pass
        assert [link.link_id for link in report.links] == [
            "factorization",
            "hypergeometric",
            "post_heine",
        ]

    def test_order_one(self):
        assert pa_series_identity_chain(1).all_pass

    def test_factorization_hand_check(self):
        # (1 - r q)(1 + phi q) = 1 + q - q^2 coefficientwise
        prod = (
            TruncatedSeries.one(4)
            .mul_one_minus(PHI_INV, 1)
            .mul_one_minus(-PHI, 1)
        )
        assert prod.coeffs == [1, 1, -1, 0, 0]
