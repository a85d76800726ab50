"""Cycle-index generating functions for matrix classes, and limit evaluation.

The conjugacy class of a matrix over F_q is the choice, for each monic
irreducible polynomial phi, of a partition recording the sizes of the
generalized Jordan blocks at phi.  Summing u^n / gl_order(n) over all
matrices therefore factors into a product over the irreducibles, one
factor per polynomial, each a series in u^deg(phi).  Restricting the
allowed partitions per polynomial restricts the matrices counted, which
yields the generating functions built here.

A "normalized" series is one whose u^n coefficient must be multiplied by
gl_order(q, n) to give the matrix count; the conjugacy class series are
plain ordinary generating functions.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial

from .ffpoly import NotCoprime, cyclotomic_factor_degrees, irreducible_poly_count
from .qcount import PrimePower, gl_order
from .exact_series import DEFAULT_ORDER, TruncSeries


class BadKindParams(ValueError):
    """Unknown generating function tag, or parameters that do not fit it."""


class NonIntegralCount(ArithmeticError):
    """A coefficient that must be a count failed to be a non-negative integer."""


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n with parts descending, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    result: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def walk(remaining: int, maxpart: int) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            prefix.append(part)
            walk(remaining - part, part)
            prefix.pop()

    walk(n, n)
    return result


def centralizer_order(qd: int, partition) -> int:
    """Order of the automorphism group of the module with the given partition.

    For the primary piece of a matrix at one irreducible polynomial of
    degree d (so qd = q^d), with block-size partition lam, the conjugation
    centralizer of that piece has order

        prod over distinct part sizes i (multiplicity b_i) of
        prod_{k=1..b_i} (qd^(d_i) - qd^(d_i - k)),

    where d_i = sum_j min(i, lam_j).
    """
    parts = sorted(partition, reverse=True)
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be >= 1")
    mult = Counter(parts)
    result = 1
    for i, b in mult.items():
        d_i = sum(min(i, p) for p in parts)
        for k in range(1, b + 1):
            result *= qd**d_i - qd ** (d_i - k)
    return result


def euler_inverse_factor(q: int, d: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The factor prod_{r >= 1} (1 - u^d / q^(rd))^(-1), truncated at `order`.

    Although the product runs over infinitely many r, the coefficient of
    u^(m d) has the exact closed form Q^(m(m-1)) / gl_order(Q, m) with
    Q = q^d: by a classical identity of Euler the coefficient equals
    1 / (Q^m (1 - 1/Q) ... (1 - 1/Q^m)), which rearranges to that ratio.
    The tests cross-check this against the partition sum over centralizer
    orders term by term.
    """
    if d < 1:
        raise ValueError("polynomial degree must be >= 1")
    Q = q**d
    coeffs = [Fraction(0)] * (order + 1)
    m = 0
    while m * d <= order:
        coeffs[m * d] = Fraction(Q ** (m * (m - 1)), gl_order(Q, m))
        m += 1
    return TruncSeries(coeffs, order)


def nu_weighted_product(q: int, factor_fn, order: int = DEFAULT_ORDER) -> TruncSeries:
    """prod_{d=1..order} factor_fn(d) ** nu_d, with nu_d the irreducible count.

    factor_fn(d) must return a TruncSeries with constant term 1 whose
    non-constant support starts at u^d, so degrees beyond `order`
    contribute nothing and the product is exact to the truncation order.
    """
    result = TruncSeries.one(order)
    for d in range(1, order + 1):
        factor = factor_fn(d)
        if factor.coeff(0) != 1:
            raise ValueError("product factors must have constant term 1")
        result = result * factor ** irreducible_poly_count(q, d)
    return result


def unit_partition_sum(Q: int, d: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """sum_{m >= 0} u^(m d) / gl_order(Q, m), truncated at `order`.

    This is the factor contributed by one irreducible polynomial of degree
    d when its allowed partitions are 1^m (all parts equal to 1): the
    centralizer of m repeated blocks is the invertible group over the
    degree-d extension field, of order gl_order(Q, m) with Q = q^d.
    """
    coeffs = [Fraction(0)] * (order + 1)
    m = 0
    while m * d <= order:
        coeffs[m * d] = Fraction(1, gl_order(Q, m))
        m += 1
    return TruncSeries(coeffs, order)


def _one_minus_u_recip(order: int) -> TruncSeries:
    return (TruncSeries.one(order) - TruncSeries.monomial(1, 1, order)).recip()


# tag -> True when the u^n coefficient must be scaled by gl_order(q, n)
GF_KINDS: dict[str, bool] = {
    "invertible_check": True,
    "linear_derangement": True,
    "projective_derangement": True,
    "diagonalizable": True,
    "projection": True,
    "power_identity": True,
    "cyclic": True,
    "cyclic_alt": True,
    "semisimple": True,
    "separable": True,
    "separable_alt": True,
    "conjclasses_all": False,
    "conjclasses_gl": False,
    "bell": True,
}


def gf_build(
    kind: str, q: int, order: int = DEFAULT_ORDER, k: int | None = None
) -> TruncSeries:
    """Build the truncated generating function for one matrix class.

    Normalized kinds (see GF_KINDS) carry count_n / gl_order(q, n) as the
    u^n coefficient; the conjugacy class kinds carry the count itself.
    """
    if kind not in GF_KINDS:
        raise BadKindParams(f"unknown generating function kind {kind!r}")
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    pp = PrimePower.of(q)
    if kind != "power_identity" and k is not None:
        raise BadKindParams(f"kind {kind!r} does not take a power k")

    if kind == "invertible_check":
        return _one_minus_u_recip(order)

    if kind == "linear_derangement":
        return _one_minus_u_recip(order) * euler_inverse_factor(q, 1, order).recip()

    if kind == "projective_derangement":
        removed = euler_inverse_factor(q, 1, order).recip() ** (q - 1)
        return _one_minus_u_recip(order) * removed

    if kind == "diagonalizable":
        return unit_partition_sum(q, 1, order) ** q

    if kind == "projection":
        return unit_partition_sum(q, 1, order) ** 2

    if kind == "power_identity":
        if k is None:
            raise BadKindParams("power_identity needs the exponent k")
        if k < 1:
            raise BadKindParams("the exponent k must be >= 1")
        if k % pp.p == 0:
            raise BadKindParams(
                f"z^{k} - 1 is not square-free in characteristic {pp.p}"
            )
        try:
            degrees = cyclotomic_factor_degrees(q, k)
        except NotCoprime as exc:
            raise BadKindParams(str(exc)) from exc
        result = TruncSeries.one(order)
        for d in degrees:
            result = result * unit_partition_sum(q**d, d, order)
        return result

    if kind == "cyclic":

        def cyclic_factor(d: int) -> TruncSeries:
            Qd = q**d
            coeffs = [Fraction(0)] * (order + 1)
            coeffs[0] = Fraction(1)
            m = 1
            while m * d <= order:
                coeffs[m * d] = Fraction(1, Qd ** (m - 1) * (Qd - 1))
                m += 1
            return TruncSeries(coeffs, order)

        return nu_weighted_product(q, cyclic_factor, order)

    if kind == "cyclic_alt":

        def cyclic_alt_factor(d: int) -> TruncSeries:
            return TruncSeries.one(order) + TruncSeries.monomial(
                Fraction(1, q**d * (q**d - 1)), d, order
            )

        return _one_minus_u_recip(order) * nu_weighted_product(
            q, cyclic_alt_factor, order
        )

    if kind == "semisimple":
        return nu_weighted_product(
            q, lambda d: unit_partition_sum(q**d, d, order), order
        )

    if kind == "separable":

        def separable_factor(d: int) -> TruncSeries:
            return TruncSeries.one(order) + TruncSeries.monomial(
                Fraction(1, q**d - 1), d, order
            )

        return nu_weighted_product(q, separable_factor, order)

    if kind == "separable_alt":

        def separable_alt_factor(d: int) -> TruncSeries:
            # factor numerator is u^d (1 - u^d): multiplying the plain
            # separable factor 1 + u^d/(q^d - 1) by 1 - u^d/q^d gives
            # exactly 1 + (u^d - u^(2d)) / (q^d (q^d - 1))
            c = Fraction(1, q**d * (q**d - 1))
            return (
                TruncSeries.one(order)
                + TruncSeries.monomial(c, d, order)
                - TruncSeries.monomial(c, 2 * d, order)
            )

        return _one_minus_u_recip(order) * nu_weighted_product(
            q, separable_alt_factor, order
        )

    if kind == "conjclasses_all":
        result = TruncSeries.one(order)
        for r in range(1, order + 1):
            result = result * (
                TruncSeries.one(order) - TruncSeries.monomial(q, r, order)
            ).recip()
        return result

    if kind == "conjclasses_gl":
        result = TruncSeries.one(order)
        for r in range(1, order + 1):
            geom = (
                TruncSeries.one(order) - TruncSeries.monomial(q, r, order)
            ).recip()
            result = result * geom * (
                TruncSeries.one(order) - TruncSeries.monomial(1, r, order)
            )
        return result

    if kind == "bell":
        return (unit_partition_sum(q, 1, order) - 1).exp()

    raise BadKindParams(f"unhandled kind {kind!r}")  # unreachable


def extract_count(gf: TruncSeries, n: int, q: int, normalized: bool = True) -> int:
    """Read the matrix count of size n out of a generating function.

    For normalized series the coefficient is scaled by gl_order(q, n); the
    result must come out a non-negative integer or the series was wrong.
    """
    c = gf.coeff(n)
    value = c * gl_order(q, n) if normalized else c
    if value.denominator != 1:
        raise NonIntegralCount(f"coefficient of u^{n} scales to non-integer {value}")
    num = value.numerator
    if num < 0:
        raise NonIntegralCount(f"coefficient of u^{n} scales to negative {num}")
    return num


def q_stirling_via_gf(q: int, n: int, k: int) -> int:
    """Direct sum splitting counts read off the k-th power of the unit sum.

    The exponential-style identity: the series (sum_{r>=1} u^r/gl_order(r))^k
    carries k! * {n into k parts} / gl_order(n) as its u^n coefficient.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    s = unit_partition_sum(q, 1, n) - 1
    value = (s**k).coeff(n) * gl_order(q, n) * Fraction(1, factorial(k))
    if value.denominator != 1:
        raise NonIntegralCount(f"splitting count came out as {value}")
    return value.numerator


LIMIT_KINDS = (
    "invertible",
    "linear_derangement_frac",
    "projective_frac",
    "cyclic",
    "conj_ratio",
)


def decimal_truncate(x: Fraction, digits: int) -> str:
    """Render a non-negative rational with `digits` decimals, truncated."""
    if x < 0:
        raise ValueError("expected a non-negative value")
    if digits < 0:
        raise ValueError("digits must be >= 0")
    scaled = x.numerator * 10**digits // x.denominator
    s = str(scaled).rjust(digits + 1, "0")
    if digits == 0:
        return s
    return s[:-digits] + "." + s[-digits:]


def limit_eval(kind: str, q: int, digits: int = 5) -> str:
    """Evaluate a limiting probability to `digits` truncated decimals.

    Uses exact partial products with enough factors that the neglected
    tail is below 10^-(digits+2): dropping the factors for r > R changes
    the product by less than sum_{r>R} q^-r < q^-R / (1 - 1/q).

    The limits: invertible, linear_derangement_frac and conj_ratio all
    equal prod_{r>=1}(1 - q^-r); projective_frac is its (q-1) power; and
    cyclic is (1 - q^-5) * prod_{r>=3}(1 - q^-r).
    """
    if kind not in LIMIT_KINDS:
        raise BadKindParams(f"unknown limit kind {kind!r}")
    PrimePower.of(q)
    if not 1 <= digits <= 50:
        raise ValueError("digits must be between 1 and 50")
    allowance = Fraction(1, 10 ** (digits + 2))
    mult = q - 1 if kind == "projective_frac" else 1
    R = 1
    while Fraction(mult * q, (q - 1) * q**R) >= allowance:
        R += 1
    if kind == "projective_frac":
        prod = Fraction(1)
        for r in range(1, R + 1):
            prod *= (1 - Fraction(1, q**r)) ** (q - 1)
    elif kind == "cyclic":
        R = max(R, 5)
        prod = 1 - Fraction(1, q**5)
        for r in range(3, R + 1):
            prod *= 1 - Fraction(1, q**r)
    else:
        prod = Fraction(1)
        for r in range(1, R + 1):
            prod *= 1 - Fraction(1, q**r)
    return decimal_truncate(prod, digits)
