"""Probe the exponential growth rate of pa(n).

The counts grow like sqrt(A)/(2 pi n) * exp(2 sqrt(A n)) with
A = pi^2/12 + 2 log^2((1+sqrt5)/2) ~ 1.2856.  No error term comes with that
statement, so the desk-scale evidence is monotone improvement: exact
coefficients against the estimate, and the generating function evaluated at
q = e^(-eps) against its predicted blow-up as eps shrinks.
"""

import math

from papartitions import series_G1, series_pa_o
from papartitions.asympt import (
    auluck_integral_quadrature,
    auluck_product_check,
    constant_A,
    eta_inversion_check,
    eval_PA_diagnostic,
    ingham_estimate,
    pa_o_dominance_table,
    tauberian_ratio_table,
)

print(f"A = {constant_A(30)}")
print(f"its product-exponent part, by adaptive quadrature of "
      f"log(1+x-x^2)/x: {auluck_integral_quadrature(1e-10):.10f}")
print(f"same constant in closed form: "
      f"{2 * math.log((1 + math.sqrt(5)) / 2) ** 2:.10f}")

print("\nExact log pa(n) versus the growth estimate:")
table = series_G1(2000).table()
for row in tauberian_ratio_table([500, 1000, 2000], table):
    print(f"    n={int(row.parameter):5d}  log pa = {row.lhs:9.3f}  "
          f"estimate = {row.rhs:9.3f}  gap = {row.log_ratio:+.4f}")

print("\nOne-variable limits feeding the estimate (gaps shrink with eps):")
for eps in (0.5, 0.2, 0.1, 0.05):
    eta = eta_inversion_check(eps)
    auluck = auluck_product_check(eps)
    print(f"    eps={eps:4.2f}  eta gap {eta.log_ratio:+.5f}   "
          f"product gap {auluck.log_ratio:+.5f}")

print("\nFull generating function against its predicted shape:")
for eps in (0.2, 0.1, 0.05):
    row = eval_PA_diagnostic(eps)
    print(f"    eps={eps:4.2f}  log PA(e^-eps) = {row.lhs:8.3f}  "
          f"predicted = {row.rhs:8.3f}  gap = {row.log_ratio:+.4f}")

print("\nShare of partitions whose smallest part is odd (their subfamily has "
      "the same growth rate, so the share climbs toward 1):")
pao = series_pa_o(1000).table()
for row in pa_o_dominance_table([200, 500, 1000], table, pao):
    print(f"    n={int(row.parameter):5d}  pa_o/pa = {math.exp(row.log_ratio):.4f}")
