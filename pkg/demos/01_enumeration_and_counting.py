"""Enumerate parity alternating partitions and count them three ways.

A partition qualifies when its distinct part values alternate between odd
and even as they decrease: 3+2+2+1+1 does, 3+1+1 does not.  This script
walks through the census of small cases and shows that enumeration, the
dynamic-programming counter, and conjugation all tell the same story.
"""

from papartitions import (
    conjugate,
    count_pa_dp,
    enumerate_pa,
    is_pa,
    is_postar,
    partitions_of,
)


def fmt(p):
    return "+".join(map(str, p))


print("The parity alternating partitions of 6:")
for p in sorted(enumerate_pa(6), reverse=True):
    print("   ", fmt(p))

print("\nWhy (3,1,1) fails: distinct parts 3 and 1 are both odd ->",
      is_pa((3, 1, 1)))

print("\nFirst 15 counts, from the recurrence (no series involved):")
counts = count_pa_dp(15)
for n, c in enumerate(counts, start=1):
    print(f"    pa({n:2d}) = {c}")

print("\nCross-check against brute-force enumeration up to n = 25:",
      all(len(enumerate_pa(n)) == counts_25[n - 1]
          for counts_25 in [count_pa_dp(25)] for n in range(1, 26)))

# Conjugation sends this family onto a very different-looking one: the
# partitions where every distinct part except the largest appears an odd
# number of times.
print("\nConjugation pairs:")
for p in [(5, 4, 4, 1), (6, 3, 3, 2)]:
    q = conjugate(p)
    print(f"    {fmt(p)}  <->  {fmt(q)}   (partner has odd multiplicities: "
          f"{is_postar(q)})")

n = 12
image = {conjugate(p) for p in enumerate_pa(n)}
other = {p for p in partitions_of(n) if is_postar(p)}
print(f"\nAt n = {n} the conjugate image is exactly the odd-multiplicity "
      f"class: {image == other} ({len(image)} partitions each)")
