"""Truncated formal power series over exact rationals.

Every generating function in this package lives in one indeterminate u and
is kept only up to a fixed truncation order N: a series is the tuple of its
coefficients of u^0 .. u^N, each an exact Fraction.  Arithmetic between
series of different orders truncates to the smaller of the two orders,
which is the behaviour wanted when an infinite product is multiplied out
factor by factor.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_ORDER = 16


class ZeroConstantTerm(ZeroDivisionError):
    """Reciprocal of a series whose constant term is zero."""


class NonzeroConstantTerm(ValueError):
    """Exponential of a series whose constant term is not zero."""


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"series coefficients must be int or Fraction, got {type(value).__name__}"
    )


class TruncSeries:
    """A power series in u truncated at order N, with Fraction coefficients.

    Instances are immutable; every operation returns a new series.  Scalars
    (int or Fraction) mix freely with series in +, - and *.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        data = [_coerce(c) for c in coeffs]
        if order is None:
            if not data:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(data) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(data) <= order:
            data.extend([Fraction(0)] * (order + 1 - len(data)))
        self.order: int = order
        self.coeffs: tuple[Fraction, ...] = tuple(data[: order + 1])

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls((1,), order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int) -> TruncSeries:
        """coeff * u^power truncated at order (zero series if power > order)."""
        if power < 0:
            raise ValueError("power must be >= 0")
        data = [Fraction(0)] * (order + 1)
        if power <= order:
            data[power] = _coerce(coeff)
        return cls(data, order)

    def coeff(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order of a series")
        return TruncSeries(self.coeffs[: order + 1], order)

    def _promote(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries((other,), self.order)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n
        )

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative power: invert with recip() first")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def recip(self) -> TruncSeries:
        """Multiplicative inverse, by the standard convolution recurrence."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1) / a[0]
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                if a[k]:
                    s += a[k] * out[m - k]
            out[m] = -out[0] * s
        return TruncSeries(out, n)

    def exp(self) -> TruncSeries:
        """exp of a series with zero constant term: sum of a^k / k!."""
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("exp needs a zero constant term")
        n = self.order
        acc = TruncSeries.one(n)
        term = TruncSeries.one(n)
        for k in range(1, n + 1):
            term = term * self * Fraction(1, k)
            acc = acc + term
        return acc

    def dilate(self, d: int) -> TruncSeries:
        """Substitute u -> u^d, keeping the same truncation order."""
        if d < 1:
            raise ValueError("dilation step must be >= 1")
        if d == 1:
            return self
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * d > self.order:
                break
            out[i * d] = c
        return TruncSeries(out, self.order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncSeries(order={self.order}, [{shown}{tail}])"
