"""End-to-end acceptance checks.

Each test covers one acceptance criterion at its stated tolerance (all exact
unless a numeric tolerance is given) and prints a single PASS/FAIL line, so
`pytest -s tests/test_acceptance.py` reads as a checklist.
"""

import math
import time
from contextlib import contextmanager

import mpmath
import pytest

from papartitions import (
    conjugate,
    count_pa_dp,
    enumerate_pa,
    heine_check,
    is_pa_smallest_odd,
    is_postar,
    pa_series_identity_chain,
    partitions_of,
    series_G1,
    series_G2,
    series_pa_o,
    verify_injection,
)
from papartitions.asympt import (
    EPS_GRID,
    PA_EVAL_EPS_GRID,
    auluck_integral_quadrature,
    auluck_product_check,
    constant_A,
    eta_inversion_check,
    eval_PA_diagnostic,
    pa_o_dominance_table,
    tauberian_ratio_table,
)
from papartitions.exactarith import PHI, PHI_INV, Quad5
from papartitions.monotone import _matching_cases

TABLE_VALUES = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88]


@contextmanager
def criterion(number: int, label: str, seconds_budget: float | None = None):
    start = time.perf_counter()
    outcome = {"ok": False}
    try:
        yield outcome
        outcome["ok"] = True
    finally:
        elapsed = time.perf_counter() - start
        status = "PASS" if outcome["ok"] else "FAIL"
        print(f"ACCEPTANCE {number} [{status}] {label} ({elapsed:.1f}s)")
        if outcome["ok"] and seconds_budget is not None:
            assert elapsed < seconds_budget, (
                f"criterion {number} exceeded its {seconds_budget}s budget"
            )


def test_criterion_1_table_reproduction():
    with criterion(1, "pa(1..15) via enumeration, DP, G1, G2", 5.0):
        assert [len(enumerate_pa(n)) for n in range(1, 16)] == TABLE_VALUES
        assert count_pa_dp(15) == TABLE_VALUES
        assert series_G1(15).coefficients == TABLE_VALUES
        assert series_G2(15).coefficients == TABLE_VALUES


def test_criterion_2_oracle_equivalence(pa_sets, dp_counts):
    with criterion(2, "four-way count agreement and conjugation bijection, n <= 40",
                   120.0):
        g1 = series_G1(40).table()
        g2 = series_G2(40).table()
        for n in range(1, 41):
            assert len(pa_sets[n]) == dp_counts[n - 1] == g1[n] == g2[n]
            conj_image = {conjugate(p) for p in pa_sets[n]}
            postar_set = {p for p in partitions_of(n) if is_postar(p)}
            assert conj_image == postar_set


def test_criterion_3_g2_integrality():
    with criterion(3, "series_G2(300): sqrt5 parts vanish, integer projection"):
        result = series_G2(300)
        assert result.irrational_residue_zero is True
        assert result.constant_term == 0
        assert len(result.coefficients) == 300


def test_criterion_4_heine_verification():
    with criterion(4, "heine_check(r, -phi, -1, 200) and identity chain at 200",
                   120.0):
        assert heine_check(PHI_INV, -PHI, Quad5(-1), 200)
        report = pa_series_identity_chain(200)
        assert report.all_pass, [link for link in report.links if not link.passed]


def test_criterion_5_monotonicity_and_injection(pa_sets, dp_counts):
    with criterion(5, "injection audit 13 <= n <= 40; G1(1000) strictly increasing"):
        for n in range(1, 41):
            for p in pa_sets[n]:
                assert len(_matching_cases(p)) == 1
        for n in range(13, 41):
            report = verify_injection(n)
            assert report.image_valid
            assert report.injective
            assert report.witness_absent
            assert sum(report.case_counts.values()) == dp_counts[n - 1]
        coeffs = series_G1(1000).coefficients
        assert all(a < b for a, b in zip(coeffs, coeffs[1:]))


def test_criterion_6_pa_o_suite(pa_sets):
    with criterion(6, "series_pa_o matches enumeration to 40; starts 1,1,3,2,5"):
        table = series_pa_o(40).table()
        for n in range(1, 41):
            expected = sum(1 for p in pa_sets[n] if is_pa_smallest_odd(p))
            assert table[n] == expected
        assert table[1:6] == [1, 1, 3, 2, 5]


def test_criterion_7_asymptotic_constants():
    with criterion(7, "constant_A stable to 28+ digits; integral within 1e-8"):
        a30, a60 = constant_A(30), constant_A(60)
        assert abs(a30 - a60) < mpmath.mpf(10) ** -28
        target = 2 * math.log((1 + math.sqrt(5)) / 2) ** 2
        value = auluck_integral_quadrature(1e-8)
        assert abs(value - target) < 1e-8
        assert round(value, 5) == 0.46313


def test_criterion_8_asymptotic_trends(g1_2000, pa_o_1000):
    with criterion(8, "Ingham ratio, eps diagnostics, and dominance trends",
                   600.0):
        pa_table = g1_2000.table()
        rows = tauberian_ratio_table([500, 1000, 2000], pa_table)
        gaps = [abs(r.log_ratio) for r in rows]
        assert gaps[0] > gaps[1] > gaps[2]

        for check, grid in (
            (eta_inversion_check, EPS_GRID),
            (auluck_product_check, EPS_GRID),
            (eval_PA_diagnostic, PA_EVAL_EPS_GRID),
        ):
            diffs = [abs(check(eps).log_ratio) for eps in grid]
            assert all(a > b for a, b in zip(diffs, diffs[1:])), check.__name__

        dom = pa_o_dominance_table([200, 500, 1000], pa_table, pa_o_1000.table())
        ratios = [r.log_ratio for r in dom]
        assert ratios[0] < ratios[1] < ratios[2] < 0
