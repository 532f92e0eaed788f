"""Generating-function pipelines for pa(n) and pa_o(n), plus identity checkers.

Three independent routes produce the same integer coefficients:

* G1_sum_product     sum over n of q^n/(1-q^n) * prod_{k<n} (1 + q^k/(1-q^2k)),
                     computed over the integers with sparse factor updates.
* G2_heine_closed_form
                     (3-sqrt5)/2 * prod_{k>=1} (1+q^k-q^2k)/(1-q^2k)
                     * (1 + (3+sqrt5)/2 * sum_{n>=1} r^n/(1+phi q^n)) - 2,
                     evaluated exactly over Q(sqrt5) and projected to ints.
* G3_pa_o_product    prod_{k>=1} (1+q^k-q^2k)/(1-q^2k) alone, whose
                     coefficients count PA partitions with smallest part odd.

heine_check verifies the second Heine transformation (z fixed to q) as an
exact truncated-series identity, and pa_series_identity_chain replays each
intermediate rewriting step that connects G1 to G2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactarith import (
    PHI,
    PHI_INV,
    Quad5,
    Scalar,
    TruncatedSeries,
    _invert_scalar,
    geometric_tail,
    pochhammer,
)


class IntegralityError(ArithmeticError):
    """A pipeline produced a coefficient outside the integers (a bug signal)."""


@dataclass
class PipelineResult:
    """Integer coefficients c1..cN of one pipeline, plus its constant term."""

    pipeline_id: str
    order: int
    constant_term: int
    coefficients: list[int]
    irrational_residue_zero: bool | None = None

    def coefficient(self, n: int) -> int:
        """c_n for 1 <= n <= order (n = 0 gives the constant term)."""
        if n == 0:
            return self.constant_term
        if not 1 <= n <= self.order:
            raise ValueError(f"coefficient {n} not computed (order {self.order})")
        return self.coefficients[n - 1]

    def table(self) -> list[int]:
        """Coefficients indexed by exponent: table()[n] == c_n."""
        return [self.constant_term] + list(self.coefficients)


# ---------------------------------------------------------------------------
# integer coefficient kernels (plain lists, exact, no series-class overhead)


def _mul_odd_multiples(coeffs: list[int], k: int) -> list[int]:
    """Multiply by 1 + q^k + q^3k + q^5k + ... = 1 + q^k/(1-q^2k)."""
    n = len(coeffs) - 1
    out = list(coeffs)
    for off in range(k, n + 1, 2 * k):
        for i in range(off, n + 1):
            out[i] += coeffs[i - off]
    return out


def _mul_trinomial(coeffs: list[int], k: int) -> list[int]:
    """Multiply by (1 + q^k - q^2k) in place-style (uses only old values)."""
    n = len(coeffs) - 1
    out = list(coeffs)
    for i in range(k, n + 1):
        out[i] += coeffs[i - k]
    for i in range(2 * k, n + 1):
        out[i] -= coeffs[i - 2 * k]
    return out


def _div_one_minus_int(coeffs: list[int], m: int) -> None:
    """Divide by (1 - q^m) in place via the running-sum recurrence."""
    for i in range(m, len(coeffs)):
        coeffs[i] += coeffs[i - m]


def series_G1(order: int) -> PipelineResult:
    """Sum-product generating function of pa(n), exact to the given order.

    Maintains P = prod_{k<n} (1 + q^k/(1-q^2k)) incrementally; the n-th
    summand is q^n/(1-q^n) * P and terms with n > order contribute nothing
    below q^(order+1).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    n = order
    prod = [0] * (n + 1)
    prod[0] = 1
    acc = [0] * (n + 1)
    for m in range(1, n + 1):
        # term = q^m/(1-q^m) * prod, accumulated directly into acc
        term = [0] * (n + 1)
        for i in range(m, n + 1):
            term[i] = term[i - m] + prod[i - m]
            acc[i] += term[i]
        prod = _mul_odd_multiples(prod, m)
    if acc[0] != 0:
        raise IntegralityError("constant term of the pa series must vanish")
    if any(c < 0 for c in acc):
        raise IntegralityError("pa series coefficients must be nonnegative")
    return PipelineResult("G1_sum_product", n, 0, acc[1:])


def series_pa_o(order: int) -> PipelineResult:
    """Product generating function counting PA partitions with odd smallest part.

    1 + sum_{n>=1} pa_o(n) q^n = prod_{k>=1} (1 + q^k - q^2k)/(1 - q^2k).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = _auluck_product_int(order)
    if any(c < 0 for c in coeffs):
        raise IntegralityError("pa_o series coefficients must be nonnegative")
    return PipelineResult("G3_pa_o_product", order, coeffs[0], coeffs[1:])


def _auluck_product_int(order: int) -> list[int]:
    """Integer coefficients of prod_{k=1..order} (1+q^k-q^2k)/(1-q^2k)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for k in range(1, order + 1):
        coeffs = _mul_trinomial(coeffs, k)
        _div_one_minus_int(coeffs, 2 * k)
    return coeffs


# ---------------------------------------------------------------------------
# closed form over Q(sqrt 5)


def _g2_quad5_series(order: int) -> list[Quad5 | int]:
    """Coefficients of the closed-form pa series, kept in Q(sqrt 5).

    The infinite sum is split at n = order: each kept summand
    r^n/(1 + phi q^n) is expanded geometrically; beyond the split point
    1/(1 + phi q^n) is 1 modulo q^(order+1), so the remainder collapses to
    the scalar tail r^(order+1)/(1 - r).
    """
    n = order
    total: list[Scalar] = [0] * (n + 1)
    r_pow = Quad5(1)
    for m in range(1, n + 1):
        r_pow = r_pow * PHI_INV
        minus_phi_pow: Scalar = 1
        for j in range(0, n // m + 1):
            total[j * m] = total[j * m] + r_pow * minus_phi_pow
            minus_phi_pow = minus_phi_pow * (-PHI)
    total[0] = total[0] + geometric_tail(PHI_INV, n + 1)

    frame_hi = 1 + PHI  # (3 + sqrt5)/2
    frame_lo = 2 - PHI  # (3 - sqrt5)/2
    inner: list[Scalar] = [frame_hi * c for c in total]
    inner[0] = inner[0] + 1

    prod = _auluck_product_int(n)
    out: list[Scalar] = [0] * (n + 1)
    for i, p in enumerate(prod):
        if p == 0:
            continue
        for j in range(n + 1 - i):
            cj = inner[j]
            if isinstance(cj, int) and cj == 0:
                continue
            out[i + j] = out[i + j] + p * cj
    result = [frame_lo * c for c in out]
    result[0] = result[0] - 2
    return result


def series_G2(order: int) -> PipelineResult:
    """Heine closed form of the pa series, projected to integer coefficients.

    Every coefficient must come out with sqrt5-part exactly zero and an
    integer rational part; anything else raises IntegralityError.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    quad = _g2_quad5_series(order)
    ints: list[int] = []
    for i, c in enumerate(quad):
        q = Quad5._coerce(c)
        if q is None or not q.is_integer:
            raise IntegralityError(f"coefficient of q^{i} is not an integer: {c}")
        ints.append(int(q.a))
    if ints[0] != 0:
        raise IntegralityError("constant term of the closed form must vanish")
    return PipelineResult("G2_heine_closed_form", order, 0, ints[1:],
                          irrational_residue_zero=True)


# ---------------------------------------------------------------------------
# Heine's second transformation, z fixed to q


def _check_heine_domain(b: Scalar, c: Scalar) -> None:
    if not Quad5._coerce(b):
        raise ValueError("b must be nonzero")
    if Quad5._coerce(c) == Quad5(1):
        raise ValueError("c = 1 makes (c;q)_n vanish for n >= 1")
    cb = Quad5._coerce(c) / Quad5._coerce(b)
    if cb == Quad5(1):
        raise ValueError("c/b = 1 breaks the geometric tail closure")


def _poch_shifted(x: Scalar, order: int) -> TruncatedSeries:
    """(xq; q)_infty to the given order: product of (1 - x q^m), m >= 1."""
    out = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        out = out.mul_one_minus(x, m)
    return out


def heine_lhs(a: Scalar, b: Scalar, c: Scalar, order: int) -> TruncatedSeries:
    """sum_{n>=0} (a,b;q)_n / (q,c;q)_n * q^n, exact to the given order.

    The n-th summand has valuation >= n, so the partial sum up to n = order
    equals the infinite sum modulo q^(order+1).
    """
    n = order
    ratio = TruncatedSeries.one(n)
    acc = TruncatedSeries.one(n)
    for m in range(1, n + 1):
        ratio = (
            ratio.mul_one_minus(a, m - 1)
            .mul_one_minus(b, m - 1)
            .div_one_minus(1, m)
            .div_one_minus(c, m - 1)
        )
        cs = acc.coeffs
        rs = ratio.coeffs
        for i in range(m, n + 1):
            cs[i] = cs[i] + rs[i - m]
    return acc


def heine_rhs(a: Scalar, b: Scalar, c: Scalar, order: int) -> TruncatedSeries:
    """Right side of the transformation with the scalar tail closed exactly.

    For n > order the summand ratio stabilizes modulo q^(order+1), leaving a
    geometric scalar series in c/b that geometric_tail sums in closed form.
    """
    n = order
    cb = Quad5._coerce(c) / Quad5._coerce(b)
    abc = Quad5._coerce(a) * Quad5._coerce(b) / Quad5._coerce(c)

    prefac = (
        pochhammer(cb, None, n)
        * _poch_shifted(b, n)
        * (pochhammer(c, None, n).inverse())
        * (_poch_shifted(1, n).inverse())
    )

    term = TruncatedSeries.one(n)
    total = TruncatedSeries.one(n)
    for m in range(1, n + 1):
        term = (
            term.mul_one_minus(abc, m)
            .mul_one_minus(b, m - 1)
            .div_one_minus(1, m)
            .div_one_minus(b, m)
            * cb
        )
        total = total + term
    # one more update stabilizes the ratio; all later steps just multiply c/b
    stable = (
        term.mul_one_minus(abc, n + 1)
        .mul_one_minus(b, n)
        .div_one_minus(1, n + 1)
        .div_one_minus(b, n + 1)
        * cb
    )
    total = total + stable * _invert_scalar(1 - cb)
    return prefac * total


def heine_check(a: Scalar, b: Scalar, c: Scalar, order: int) -> bool:
    """Exact coefficientwise comparison of the two transformation sides."""
    if order < 0:
        raise ValueError("order must be >= 0")
    _check_heine_domain(b, c)
    return heine_lhs(a, b, c, order) == heine_rhs(a, b, c, order)


# ---------------------------------------------------------------------------
# the identity chain from the sum-product series to the closed form


@dataclass
class ChainLink:
    link_id: str
    passed: bool
    detail: str = ""


@dataclass
class ChainReport:
    order: int
    links: list[ChainLink] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(link.passed for link in self.links)


def pa_series_identity_chain(order: int) -> ChainReport:
    """Verify every rewriting step connecting G1 to the closed form.

    Links, each an exact series identity to the given order:
      factorization   1 + q^k/(1-q^2k) = (1-r q^k)(1+phi q^k) / ((1-q^k)(1+q^k))
      hypergeometric  G1 = 2 * sum_{n>=1} (r,-phi;q)_n / (q,-1;q)_n * q^n
      post_heine      the transformed line equals the closed form
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    n = order
    report = ChainReport(n)

    bad_k = [k for k in range(1, n + 1) if not _factorization_holds(k, n)]
    report.links.append(
        ChainLink(
            "factorization",
            not bad_k,
            "all k pass" if not bad_k else f"fails at k={bad_k[:5]}",
        )
    )

    g1 = series_G1(n)
    hyper = _hypergeometric_sum(n)
    match = all(hyper.coeffs[i] == g1.table()[i] for i in range(n + 1))
    report.links.append(
        ChainLink(
            "hypergeometric",
            match,
            "matches G1" if match else "coefficient mismatch with G1",
        )
    )

    post = _post_heine_series(n)
    closed = _g2_quad5_series(n)
    match3 = all(
        Quad5._coerce(post.coeffs[i]) == Quad5._coerce(closed[i])
        for i in range(n + 1)
    )
    report.links.append(
        ChainLink(
            "post_heine",
            match3,
            "matches closed form" if match3 else "mismatch with closed form",
        )
    )
    return report


def _factorization_holds(k: int, order: int) -> bool:
    lhs = TruncatedSeries.one(order).div_one_minus(1, 2 * k)
    lhs = lhs.shift(k)
    lhs = lhs + TruncatedSeries.one(order)
    rhs = (
        TruncatedSeries.one(order)
        .mul_one_minus(PHI_INV, k)
        .mul_one_minus(-PHI, k)
        .div_one_minus(1, k)
        .div_one_minus(-1, k)
    )
    return lhs == rhs


def _hypergeometric_sum(order: int) -> TruncatedSeries:
    """2 * sum_{n>=1} (r, -phi; q)_n / (q, -1; q)_n * q^n."""
    n = order
    ratio = TruncatedSeries.one(n)
    acc = TruncatedSeries.zero(n)
    for m in range(1, n + 1):
        ratio = (
            ratio.mul_one_minus(PHI_INV, m - 1)
            .mul_one_minus(-PHI, m - 1)
            .div_one_minus(1, m)
            .div_one_minus(-1, m - 1)
        )
        cs = acc.coeffs
        rs = ratio.coeffs
        for i in range(m, n + 1):
            cs[i] = cs[i] + rs[i - m]
    return acc * 2


def _post_heine_series(order: int) -> TruncatedSeries:
    """2 * (r, -phi q; q)_inf / (-1, q; q)_inf * sum_n (-phi;q)_n/(-phi q;q)_n r^n - 2."""
    n = order
    prefac = (
        pochhammer(PHI_INV, None, n)
        * _poch_shifted(-PHI, n)
        * pochhammer(Quad5(-1), None, n).inverse()
        * _poch_shifted(1, n).inverse()
    )
    term = TruncatedSeries.one(n)
    total = TruncatedSeries.one(n)
    for m in range(1, n + 1):
        term = (
            term.mul_one_minus(-PHI, m - 1).div_one_minus(-PHI, m) * PHI_INV
        )
        total = total + term
    stable = (
        term.mul_one_minus(-PHI, n).div_one_minus(-PHI, n + 1) * PHI_INV
    )
    total = total + stable * _invert_scalar(1 - PHI_INV)
    return prefac * total * 2 - 2
