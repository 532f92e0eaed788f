"""Audit the sum-raising injection PA(n) -> PA(n+1).

The counting sequence pa(n) increases strictly.  The combinatorial reason is
a map that adds 1 to the total while staying parity alternating, built from
twelve cases keyed on how the partition ends.  Each case leaves a different
fingerprint on the tail of its output, which is what keeps the map
one-to-one, and for every target size a designated all-twos (or
three-then-twos) partition is never produced.
"""

from collections import Counter

from papartitions import (
    CaseId,
    classify_case,
    enumerate_pa,
    phi,
    verify_injection,
    witness_partition,
)


def fmt(p):
    return "+".join(map(str, p))


print("A few rewrites (n = 13 -> 14):")
for p in [(13,), (4, 3, 3, 3), (2, 2, 2, 2, 2, 2, 1), (7, 6), (10, 3)]:
    case = classify_case(p)
    print(f"    {fmt(p):>16}  --[{case.value:^22}]-->  {fmt(phi(p))}")

print("\nCase census over PA(20):")
census = Counter(classify_case(p) for p in enumerate_pa(20))
for case in CaseId:
    print(f"    {case.value:<24} {census.get(case, 0):4d}")
print(f"    {'total':<24} {sum(census.values()):4d}")

print("\nFull audits:")
for n in (13, 20, 30):
    report = verify_injection(n)
    size = sum(report.case_counts.values())
    print(f"    n={n:2d}: {size} inputs, image valid: {report.image_valid}, "
          f"injective: {report.injective}, witness {fmt(witness_partition(n + 1))} "
          f"absent: {report.witness_absent}")

print("\nBecause the witness is missed, pa(n) < pa(n+1) for every audited n.")
