"""Exact coefficient arithmetic: the field Q(sqrt 5) and truncated power series.

Rationals are stdlib fractions.Fraction.  Quad5 represents a + b*sqrt(5) with
rational a, b and carries the golden-ratio constants used throughout the
q-series identities.  TruncatedSeries holds c0..cN over any of the coefficient
rings int, Fraction, Quad5 (mixing is fine, arithmetic coerces upward) and all
operations are exact modulo q^(N+1).  No floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "Quad5"]


class Quad5:
    """An element a + b*sqrt(5) of the real quadratic field Q(sqrt 5)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __repr__(self) -> str:
        return f"Quad5({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt5)"

    @staticmethod
    def _coerce(x) -> "Quad5 | None":
        if isinstance(x, Quad5):
            return x
        if isinstance(x, (int, Fraction)):
            return Quad5(x)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __neg__(self) -> "Quad5":
        return Quad5(-self.a, -self.b)

    def __add__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad5(o.a - self.a, o.b - self.b)

    def __mul__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "Quad5":
        """Multiplicative inverse (a - b*sqrt5) / (a^2 - 5 b^2).

        The norm a^2 - 5 b^2 vanishes only at zero because sqrt 5 is
        irrational.
        """
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        return Quad5(self.a / norm, -self.b / norm)

    def __truediv__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Quad5":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Quad5":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = Quad5(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Quad5":
        """Galois conjugate a - b*sqrt(5)."""
        return Quad5(self.a, -self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5 ** 0.5

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1


#: Golden ratio (1 + sqrt5)/2.
PHI = Quad5(Fraction(1, 2), Fraction(1, 2))
#: Its reciprocal (sqrt5 - 1)/2 = PHI - 1.
PHI_INV = Quad5(Fraction(-1, 2), Fraction(1, 2))


def quad5_arith(x: Quad5, y: Quad5, op: str) -> Quad5:
    """Dispatch exact field arithmetic by operation name (add/sub/mul/div)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _invert_scalar(c: Scalar) -> Scalar:
    """Exact multiplicative inverse within the coefficient ring of c."""
    if isinstance(c, Quad5):
        return c.inverse()
    if isinstance(c, Fraction):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / c
    if isinstance(c, int):
        if c in (1, -1):
            return c
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1, c)  # lift into the rationals, still exact
    raise TypeError(f"unsupported coefficient {c!r}")


class TruncatedSeries:
    """A power series truncated at a fixed order: c0 + c1 q + ... + cN q^N.

    Operations on mismatched orders truncate to the smaller order, so a
    result is always exact modulo q^(order+1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None) -> None:
        cs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend([0] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("need at least the constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def term(cls, c: Scalar, m: int, order: int) -> "TruncatedSeries":
        """The monomial c * q^m truncated at `order`."""
        coeffs = [0] * (order + 1)
        if 0 <= m <= order:
            coeffs[m] = c
        return cls(coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
            )
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncatedSeries(cs)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -1 * other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by q^m (coefficients above the order fall away)."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        n = self.order
        return TruncatedSeries(([0] * m + self.coeffs)[: n + 1], n)

    def mul_one_minus(self, c: Scalar, m: int) -> "TruncatedSeries":
        """Multiply by the binomial (1 - c q^m); m = 0 is the scalar 1 - c."""
        if m == 0:
            return self * (1 - c)
        out = list(self.coeffs)
        for i in range(self.order, m - 1, -1):
            out[i] = out[i] - c * out[i - m]
        return TruncatedSeries(out)

    def div_one_minus(self, c: Scalar, m: int) -> "TruncatedSeries":
        """Divide by (1 - c q^m), i.e. multiply by the geometric series."""
        if m == 0:
            return self * _invert_scalar(1 - c)
        out = list(self.coeffs)
        for i in range(m, self.order + 1):
            out[i] = out[i] + c * out[i - m]
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same order; needs invertible c0."""
        a = self.coeffs
        n = self.order
        b0 = _invert_scalar(a[0])
        out = [b0] + [0] * n
        for k in range(1, n + 1):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * out[k - i]
            out[k] = -b0 * acc
        return TruncatedSeries(out)

    def constant(self) -> Scalar:
        return self.coeffs[0]


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order (schoolbook convolution)."""
    n = min(f.order, g.order)
    fc, gc = f.coeffs, g.coeffs
    out: list[Scalar] = [0] * (n + 1)
    for i in range(n + 1):
        ci = fc[i]
        if isinstance(ci, int) and ci == 0:
            continue
        for j in range(n + 1 - i):
            cj = gc[j]
            if isinstance(cj, int) and cj == 0:
                continue
            out[i + j] = out[i + j] + ci * cj
    return TruncatedSeries(out)


def geom_factor(c: Scalar, m: int, order: int, mode: str) -> TruncatedSeries:
    """Either 1/(1 - c q^m) expanded geometrically, or the factor (1 - c q^m).

    mode is "inverse_one_minus" or "pochhammer_factor"; the product of the
    two results at equal (c, m) is 1 to the given order.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if mode == "pochhammer_factor":
        return TruncatedSeries.one(order).mul_one_minus(c, m)
    if mode == "inverse_one_minus":
        coeffs: list[Scalar] = [0] * (order + 1)
        power: Scalar = 1
        for e in range(0, order + 1, m):
            coeffs[e] = power
            power = power * c
        return TruncatedSeries(coeffs)
    raise ValueError(f"unknown mode {mode!r}")


def pochhammer(a: Scalar, n: int | None, order: int) -> TruncatedSeries:
    """q-Pochhammer (a; q)_n as a truncated series.

    Finite n gives the product of (1 - a q^k) for k < n.  n=None gives the
    infinite product, which equals the product over k <= order because every
    further factor is 1 modulo q^(order+1).
    """
    if n is not None and n < 0:
        raise ValueError("n must be >= 0")
    # Factors with k > order are 1 modulo q^(order+1) and can be skipped.
    stop = order + 1 if n is None else min(n, order + 1)
    out = TruncatedSeries.one(order)
    for k in range(stop):
        out = out.mul_one_minus(a, k)
    return out


def geometric_tail(ratio: Scalar, first_exponent: int) -> Scalar:
    """Closed form of the scalar tail sum ratio^n0 + ratio^(n0+1) + ...

    Returns ratio^n0 / (1 - ratio), exact in the ring of `ratio`.
    """
    if first_exponent < 0:
        raise ValueError("first_exponent must be >= 0")
    if ratio == 1:
        raise ZeroDivisionError("geometric tail diverges at ratio 1")
    num = ratio ** first_exponent if first_exponent else _one_like(ratio)
    return num * _invert_scalar(1 - ratio)


def _one_like(x: Scalar) -> Scalar:
    if isinstance(x, Quad5):
        return Quad5(1)
    if isinstance(x, Fraction):
        return Fraction(1)
    return 1


def series_from_ints(values: Iterable[int], order: int) -> TruncatedSeries:
    return TruncatedSeries(list(values), order)
