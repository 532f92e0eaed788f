"""Numerical checks for the growth rate of pa(n) and its analytic ingredients.

The counting sequence grows like sqrt(A)/(2 pi n) * exp(2 sqrt(A n)) with
A = pi^2/12 + 2 log^2((1+sqrt5)/2).  Everything here works in the log domain
(the compared quantities overflow doubles long before the interesting range)
and asserts *trends* on fixed grids rather than closeness to the limit: the
estimate carries no explicit error term, so the honest desk-scale check is
that the discrepancy shrinks monotonically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath

#: Stop extending infinite products/sums once a step changes the log by less
#: than this relative amount.
_REL_TOL = 1e-15

#: Default grid for the eta and Auluck product diagnostics.
EPS_GRID = (0.5, 0.2, 0.1, 0.05)
#: Grid for the full PA evaluation diagnostic.  Its signed discrepancy
#: crosses zero near eps = 0.46 (the -2 offset and the O(eps) sum correction
#: cancel there), so the monotone-improvement check starts below that.
PA_EVAL_EPS_GRID = (0.2, 0.1, 0.05)
#: Default grid of coefficient indices for the growth-rate comparison.
N_GRID = (500, 1000, 2000)
#: Default grid for the odd-smallest-part dominance ratio.
DOMINANCE_GRID = (200, 500, 1000)


class QuadratureError(ArithmeticError):
    """Adaptive refinement hit its depth limit before reaching tolerance."""


@dataclass
class AsymptoticParams:
    """The scaling triple (lambda, alpha, A) of the coefficient estimate."""

    lam: float
    alpha: float
    growth: float

    @classmethod
    def derive(cls) -> "AsymptoticParams":
        return cls(lam=1 / math.sqrt(math.pi), alpha=0.5, growth=constant_A_float())


@dataclass
class DiagnosticRow:
    """One grid point of a log-domain comparison (lhs vs rhs)."""

    parameter: float
    lhs: float
    rhs: float

    @property
    def log_ratio(self) -> float:
        return self.lhs - self.rhs


def constant_A(precision: int = 15) -> mpmath.mpf:
    """The growth constant pi^2/12 + 2 log^2 of the golden ratio.

    Evaluated with mpmath at the requested number of decimal digits (plus
    guard digits internally); doubling the precision must not move the
    reported digits.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    with mpmath.workdps(precision + 10):
        phi = (1 + mpmath.sqrt(5)) / 2
        value = mpmath.pi ** 2 / 12 + 2 * mpmath.log(phi) ** 2
        return +value


def constant_A_float() -> float:
    """Double-precision value of the growth constant."""
    return math.pi ** 2 / 12 + 2 * math.log((1 + math.sqrt(5)) / 2) ** 2


def ingham_estimate(n: int) -> float:
    """log of the coefficient estimate sqrt(A)/(2 pi n) * exp(2 sqrt(A n))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = constant_A_float()
    return 0.5 * math.log(a) - math.log(2 * math.pi * n) + 2 * math.sqrt(a * n)


def tauberian_ratio_table(
    ns: Sequence[int], pa_values: Sequence[int]
) -> list[DiagnosticRow]:
    """Exact log pa(n) against the estimate, for an increasing grid of n.

    pa_values[n] must hold pa(n) (index 0 is ignored), e.g. the table() of a
    generating-function pipeline.
    """
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("ns must be strictly increasing")
    rows = []
    for n in ns:
        if n < 1 or n >= len(pa_values):
            raise ValueError(f"pa({n}) not available")
        rows.append(
            DiagnosticRow(parameter=n, lhs=math.log(pa_values[n]), rhs=ingham_estimate(n))
        )
    return rows


def pa_closed_form_log(epsilon: float) -> float:
    """log PA(e^-eps) via the exact product-and-sum closed form.

    Both the product over k and the geometric sum over n are extended until
    additional terms stop moving the result at double precision.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    phi = (1 + math.sqrt(5)) / 2
    r = phi - 1
    log_prod = 0.0
    k = 1
    while True:
        x = math.exp(-k * epsilon)
        # log((1 + x - x^2)/(1 - x^2)), written via log1p for small-x accuracy
        step = math.log1p(x - x * x) - math.log1p(-x) - math.log1p(x)
        log_prod += step
        if abs(step) < _REL_TOL * (abs(log_prod) + 1.0):
            break
        k += 1
    total = 0.0
    r_pow = 1.0
    n = 1
    while True:
        r_pow *= r
        term = r_pow / (1 + phi * math.exp(-n * epsilon))
        total += term
        if r_pow < _REL_TOL * (total + 1.0):
            break
        n += 1
    value = (3 - math.sqrt(5)) / 2 * math.exp(log_prod) * (1 + (3 + math.sqrt(5)) / 2 * total) - 2
    if value <= 0:
        raise ArithmeticError("closed form evaluated to a nonpositive value")
    return math.log(value)


def pa_coefficient_sum_log(epsilon: float, pa_values: Sequence[int]) -> float:
    """log PA(e^-eps) summed directly from exact coefficients.

    Stops once a term falls below 1e-15 of the running sum; raises if the
    available coefficients are exhausted first.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    total = 0.0
    for n in range(1, len(pa_values)):
        term = pa_values[n] * math.exp(-n * epsilon)
        total += term
        if n > 1 and term < 1e-15 * total:
            return math.log(total)
    raise ValueError("coefficient list exhausted before the sum converged")


def pa_limit_prediction_log(epsilon: float) -> float:
    """The predicted small-eps behavior: log sqrt(eps/pi) + A/eps."""
    return 0.5 * math.log(epsilon / math.pi) + constant_A_float() / epsilon


def eval_PA_diagnostic(epsilon: float) -> DiagnosticRow:
    """Closed-form log PA(e^-eps) against its predicted limit shape."""
    return DiagnosticRow(
        parameter=epsilon,
        lhs=pa_closed_form_log(epsilon),
        rhs=pa_limit_prediction_log(epsilon),
    )


def eta_inversion_check(epsilon: float) -> DiagnosticRow:
    """Numeric log (e^-eps; e^-eps)_infty against the modular-inversion form.

    The discrepancy is eps/24 up to exponentially small terms, so rows on a
    shrinking eps grid must improve monotonically.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    log_prod = 0.0
    k = 1
    while True:
        x = math.exp(-k * epsilon)
        step = math.log1p(-x)
        log_prod += step
        if abs(step) < _REL_TOL * (abs(log_prod) + 1.0):
            break
        k += 1
    rhs = 0.5 * math.log(2 * math.pi / epsilon) - math.pi ** 2 / (6 * epsilon)
    return DiagnosticRow(parameter=epsilon, lhs=log_prod, rhs=rhs)


def auluck_product_check(epsilon: float) -> DiagnosticRow:
    """Numeric log prod (1 + e^-keps - e^-2keps) against (2/eps) log^2 phi."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    log_prod = 0.0
    k = 1
    while True:
        x = math.exp(-k * epsilon)
        step = math.log1p(x - x * x)
        log_prod += step
        if abs(step) < _REL_TOL * (abs(log_prod) + 1.0):
            break
        k += 1
    rhs = 2 / epsilon * math.log((1 + math.sqrt(5)) / 2) ** 2
    return DiagnosticRow(parameter=epsilon, lhs=log_prod, rhs=rhs)


def _integrand(x: float) -> float:
    """log(1 + x - x^2)/x with the removable singularity patched at zero."""
    if x < 1e-8:
        # log1p(u)/x with u = x - x^2: series 1 - 3x/2 + ... keeps full accuracy
        return 1.0 - 1.5 * x
    return math.log1p(x - x * x) / x


def auluck_integral_quadrature(
    tolerance: float = 1e-10, max_depth: int = 60
) -> float:
    """Adaptive Simpson value of the integral of log(1+x-x^2)/x over [0, 1].

    Equals 2 log^2 of the golden ratio; the integrand extends continuously
    by 1 at x = 0.
    """
    if tolerance < 1e-12:
        raise ValueError("tolerance below 1e-12 is not supported")

    def simpson(a: float, fa: float, b: float, fb: float) -> tuple[float, float, float]:
        m = 0.5 * (a + b)
        fm = _integrand(m)
        return m, fm, (b - a) / 6 * (fa + 4 * fm + fb)

    def recurse(a, fa, b, fb, m, fm, whole, tol, depth):
        if depth > max_depth:
            raise QuadratureError("adaptive refinement exceeded the depth limit")
        lm, flm, left = simpson(a, fa, m, fm)
        rm, frm, right = simpson(m, fm, b, fb)
        if abs(left + right - whole) <= 15 * tol:
            return left + right + (left + right - whole) / 15
        return recurse(a, fa, m, fm, lm, flm, left, tol / 2, depth + 1) + recurse(
            m, fm, b, fb, rm, frm, right, tol / 2, depth + 1
        )

    fa, fb = _integrand(0.0), _integrand(1.0)
    m, fm, whole = simpson(0.0, fa, 1.0, fb)
    return recurse(0.0, fa, 1.0, fb, m, fm, whole, tolerance, 0)


def pa_o_dominance_table(
    ns: Sequence[int], pa_values: Sequence[int], pa_o_values: Sequence[int]
) -> list[DiagnosticRow]:
    """Rows comparing log pa_o(n) to log pa(n) on an increasing grid.

    exp(log_ratio) is the share of PA partitions with odd smallest part; it
    climbs toward 1 as n grows.
    """
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("ns must be strictly increasing")
    rows = []
    for n in ns:
        if n < 1 or n >= len(pa_values) or n >= len(pa_o_values):
            raise ValueError(f"coefficients for n={n} not available")
        rows.append(
            DiagnosticRow(
                parameter=n,
                lhs=math.log(pa_o_values[n]),
                rhs=math.log(pa_values[n]),
            )
        )
    return rows
