"""Parity alternating partitions: predicates, conjugation, enumeration, counting.

A partition is stored as a weakly decreasing tuple of positive ints.  A
partition is *parity alternating* (PA) when its distinct part values, read in
decreasing order, alternate between odd and even.  Repeated parts are allowed,
so (3, 2, 2, 1, 1) qualifies while (3, 1, 1) does not (3 and 1 are both odd).
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

#: Default output cap for exhaustive enumeration (number of partitions).
DEFAULT_ENUMERATION_CAP = 10**8


class ResourceLimitError(RuntimeError):
    """An enumeration would produce more partitions than the configured cap."""


class DistinctProfile(NamedTuple):
    """Distinct part values (strictly decreasing) with their multiplicities."""

    values: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def reconstruct(self) -> Partition:
        """Rebuild the source partition from the profile."""
        return tuple(
            v for v, m in zip(self.values, self.multiplicities) for _ in range(m)
        )


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize to a partition tuple.

    Raises ValueError unless the parts are positive ints in weakly
    decreasing order.  The empty partition is accepted.
    """
    p = tuple(parts)
    for i, v in enumerate(p):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"parts must be positive integers, got {v!r}")
        if i and p[i - 1] < v:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def distinct_profile(p: Partition) -> DistinctProfile:
    """Group a partition into distinct values and multiplicities."""
    values = []
    mults = []
    for v, run in groupby(p):
        values.append(v)
        mults.append(sum(1 for _ in run))
    return DistinctProfile(tuple(values), tuple(mults))


def is_pa(p: Partition) -> bool:
    """True when consecutive distinct part values have opposite parity.

    The empty partition and partitions with a single distinct value are
    parity alternating.
    """
    values = distinct_profile(p).values
    return all(values[i] % 2 != values[i + 1] % 2 for i in range(len(values) - 1))


def is_pa_smallest_odd(p: Partition) -> bool:
    """True when p is parity alternating and its smallest part is odd."""
    if not p:
        raise ValueError("requires a nonempty partition")
    return p[-1] % 2 == 1 and is_pa(p)


def is_postar(p: Partition) -> bool:
    """True when every distinct part except the largest has odd multiplicity.

    The largest part may repeat any number of times.  Partitions with this
    property are exactly the conjugates of parity alternating partitions.
    """
    if not p:
        raise ValueError("requires a nonempty partition")
    mults = distinct_profile(p).multiplicities
    return all(m % 2 == 1 for m in mults[1:])


def conjugate(p: Partition) -> Partition:
    """Conjugate partition (column counts of the Young diagram).

    An involution: conjugate(conjugate(p)) == p.
    """
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n with parts at most max_part, largest part first."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_pa(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> set[Partition]:
    """The set PA(n) of parity alternating partitions of n.

    Filters the full partition list through is_pa, so the result is tied
    directly to the definition rather than to any counting recursion.
    Raises ResourceLimitError if more than `cap` partitions qualify.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out: set[Partition] = set()
    for p in partitions_of(n):
        if is_pa(p):
            out.add(p)
            if len(out) > cap:
                raise ResourceLimitError(
                    f"PA({n}) exceeds the enumeration cap of {cap}"
                )
    return out


def count_pa_dp(n_max: int) -> list[int]:
    """Counts pa(1)..pa(n_max) by dynamic programming (no power series).

    State: partitions of a remainder whose largest distinct part is v.  With
    f(r, v) = number of PA partitions of r whose largest distinct part is
    exactly v,

        f(r, v) = f(r - v, v)                      (use v at least twice)
                + [r == v]                         (v fills the remainder)
                + sum of f(r - v, v') over v' < v  (v used once, continue
                  with opposite parity)            with v' of opposite parity

    The v' sums are read off cumulative-by-parity tables, so each state
    costs O(1) and the whole run costs O(n_max^2) big-int additions.

    Returns a list whose entry at index n-1 is pa(n).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    # cum_odd[s][v] = sum of f(s, v') over odd v' <= v (likewise cum_even);
    # rows are only as long as needed since f(s, v) = 0 for v > s.
    cum_odd: list[list[int]] = [[0]]
    cum_even: list[list[int]] = [[0]]
    counts = []
    for r in range(1, n_max + 1):
        co = [0] * (r + 1)
        ce = [0] * (r + 1)
        for v in range(1, r + 1):
            s = r - v
            row_o = cum_odd[s]
            row_e = cum_even[s]
            if v <= s:
                if v % 2:
                    f_sv = row_o[v] - row_o[v - 1]
                else:
                    f_sv = row_e[v] - row_e[v - 1]
            else:
                f_sv = 0
            total = f_sv + (1 if s == 0 else 0)
            k = v - 1 if v - 1 < s else s
            total += row_e[k] if v % 2 else row_o[k]
            if v % 2:
                co[v] = co[v - 1] + total
                ce[v] = ce[v - 1]
            else:
                co[v] = co[v - 1]
                ce[v] = ce[v - 1] + total
        cum_odd.append(co)
        cum_even.append(ce)
        counts.append(co[r] + ce[r])
    return counts
