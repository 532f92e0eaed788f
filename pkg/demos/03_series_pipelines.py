"""Expand the generating functions and verify the identities behind them.

Three pipelines produce pa(n) independently: a sum of products over the
integers, a closed form over Q(sqrt 5) whose irrational parts must cancel
exactly, and (for the odd-smallest-part subfamily) a single infinite
product.  The closed form rests on a specialization of Heine's second
transformation, which is checked here as an exact truncated-series identity,
together with every intermediate rewriting step.
"""

from papartitions import (
    heine_check,
    pa_series_identity_chain,
    series_G1,
    series_G2,
    series_pa_o,
)
from papartitions.exactarith import PHI, PHI_INV, Quad5
from papartitions.genfunc import _g2_quad5_series

N = 30

g1 = series_G1(N)
g2 = series_G2(N)
g3 = series_pa_o(N)

print(f"Sum-product route, c1..c12:   {g1.coefficients[:12]}")
print(f"Closed-form route, c1..c12:   {g2.coefficients[:12]}")
print(f"Identical through order {N}:   {g1.coefficients == g2.coefficients}")

print("\nInside the closed form, before projection (coefficients of q^0..q^4):")
for i, c in enumerate(_g2_quad5_series(4)):
    q = Quad5._coerce(c)
    print(f"    q^{i}: rational part {str(q.a):>3}, sqrt5 part {q.b}")
print("Every sqrt5 component cancels, leaving honest integers.")

print(f"\nOdd-smallest-part product, 1 + c1..c12 q: constant {g3.constant_term}, "
      f"c = {g3.coefficients[:12]}")

print("\nHeine's transformation at the golden-ratio specialization "
      f"(a=r, b=-phi, c=-1), order 60: {heine_check(PHI_INV, -PHI, Quad5(-1), 60)}")

report = pa_series_identity_chain(60)
print("\nIdentity chain from the sum-product form to the closed form:")
for link in report.links:
    print(f"    {link.link_id:<16} {'ok' if link.passed else 'FAIL':<5} {link.detail}")
