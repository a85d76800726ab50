"""Closed-form exact counts of matrices and subspaces over a finite field.

Everything here is plain integer arithmetic: group orders, q-analogues
of factorials and binomial coefficients, and the matrix counts that have
a closed formula or a simple recursion (projections, diagonalizable
matrices, involutions in characteristic two, nilpotents, eigenvalue-free
matrices, and the rank triangle).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial


class CharNotTwo(ValueError):
    """The involution sum formula only holds in characteristic two."""


def exact_div(a: int, b: int) -> int:
    """Integer quotient that insists the division is exact."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    """A field size q = p**e with p prime and e >= 1."""

    p: int
    e: int
    q: int

    @classmethod
    def of(cls, q: int) -> PrimePower:
        if q < 2:
            raise ValueError(f"field size must be at least 2, got {q}")
        p = 2
        while q % p:
            p += 1
            if p * p > q:
                p = q
                break
        e = 0
        m = q
        while m % p == 0:
            m //= p
            e += 1
        if m != 1:
            raise ValueError(f"field size must be a prime power, got {q}")
        return cls(p, e, q)


class GLOrderTable:
    """Memoized orders of the groups of invertible n x n matrices over F_q."""

    def __init__(self, q: int):
        self.q = q
        self._values: list[int] = [1]

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("matrix size must be >= 0")
        while len(self._values) <= n:
            m = len(self._values)
            prod = 1
            qm = self.q**m
            for i in range(m):
                prod *= qm - self.q**i
            self._values.append(prod)
        return self._values[n]


_gl_tables: dict[int, GLOrderTable] = {}


def gl_order(q: int, n: int) -> int:
    """Number of invertible n x n matrices over F_q (the order of GL_n)."""
    table = _gl_tables.get(q)
    if table is None:
        table = _gl_tables[q] = GLOrderTable(q)
    return table.value(n)


def q_int(q: int, i: int) -> int:
    """The q-integer [i]_q = 1 + q + ... + q^(i-1)."""
    if i < 0:
        raise ValueError("q-integer index must be >= 0")
    return (q**i - 1) // (q - 1)


def q_factorial(q: int, n: int) -> int:
    """The q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    prod = 1
    for i in range(1, n + 1):
        prod *= q_int(q, i)
    return prod


def gaussian_binomial(q: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return exact_div(num, den)


def q_multinomial(q: int, parts: tuple[int, ...] | list[int]) -> int:
    """q-multinomial coefficient: flags with subquotient dimensions `parts`."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be >= 0")
    n = sum(parts)
    num = q_factorial(q, n)
    den = 1
    for p in parts:
        den *= q_factorial(q, p)
    return exact_div(num, den)


def subspace_total(q: int, n: int) -> int:
    """Total number of subspaces of F_q^n (sum of the Gaussian binomials)."""
    return sum(gaussian_binomial(q, n, k) for k in range(n + 1))


def rank_count(q: int, m: int, n: int, k: int) -> int:
    """Number of m x n matrices over F_q of rank exactly k."""
    if k < 0 or k > min(m, n):
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= (q**m - q**i) * (q**n - q**i)
        den *= q**k - q**i
    return exact_div(num, den)


def q_stirling(q: int, n: int, k: int) -> int:
    """Number of ways to split F_q^n as a direct sum of k nonzero subspaces.

    Averages the ordered splitting count over the k! orderings: the ordered
    count for dimensions (n_1, ..., n_k) is gl_order(n) divided by the
    product of the gl_order(n_i).
    """
    if n < 0 or k < 1 or k > n:
        return 0
    gn = gl_order(q, n)
    total = 0

    def walk(remaining: int, parts_left: int, denom: int) -> None:
        nonlocal total
        if parts_left == 1:
            total += exact_div(gn, denom * gl_order(q, remaining))
            return
        for first in range(1, remaining - parts_left + 2):
            walk(remaining - first, parts_left - 1, denom * gl_order(q, first))

    walk(n, k, 1)
    return exact_div(total, factorial(k))


def q_bell(q: int, n: int) -> int:
    """Total number of direct sum decompositions of F_q^n into nonzero parts."""
    if n == 0:
        return 1
    return sum(q_stirling(q, n, k) for k in range(1, n + 1))


def projection_count(q: int, n: int) -> int:
    """Number of n x n matrices P over F_q with P*P = P.

    A projection is determined by the ordered pair (image, kernel), which
    form a direct sum; summing the ordered splitting counts over the image
    dimension gives the total.
    """
    gn = gl_order(q, n)
    total = 0
    for k in range(n + 1):
        total += exact_div(gn, gl_order(q, k) * gl_order(q, n - k))
    return total


def diagonalizable_count(q: int, n: int) -> int:
    """Number of diagonalizable n x n matrices over F_q.

    A diagonalizable matrix is an ordered splitting of F_q^n into q
    eigenspaces (one per field element, possibly zero); each weak
    composition of n into q parts contributes the ordered splitting count.
    """
    gn = gl_order(q, n)
    total = 0

    def walk(remaining: int, parts_left: int, denom: int) -> None:
        nonlocal total
        if parts_left == 1:
            total += exact_div(gn, denom * gl_order(q, remaining))
            return
        for first in range(remaining + 1):
            walk(remaining - first, parts_left - 1, denom * gl_order(q, first))

    walk(n, q, 1)
    return total


def involution_count_char2(q: int, n: int) -> int:
    """Number of n x n matrices A with A*A = I over F_q, q a power of two.

    In characteristic two an involution is I + N with N of square zero, so
    the count is a sum over the rank i of N of the conjugacy class sizes:
    gl_order(n) / (q^(i(2n-3i)) gl_order(i) gl_order(n-2i)).
    """
    pp = PrimePower.of(q)
    if pp.p != 2:
        raise CharNotTwo(f"field size {q} has odd characteristic")
    gn = gl_order(q, n)
    total = 0
    for i in range(n // 2 + 1):
        total += exact_div(
            gn, q ** (i * (2 * n - 3 * i)) * gl_order(q, i) * gl_order(q, n - 2 * i)
        )
    return total


def nilpotent_count(q: int, n: int) -> int:
    """Number of nilpotent n x n matrices over F_q: q^(n^2 - n)."""
    if n < 0:
        raise ValueError("matrix size must be >= 0")
    return q ** (n * n - n)


def linear_derangement_count(q: int, n: int) -> int:
    """Number of invertible n x n matrices over F_q with no eigenvalue 1.

    Satisfies e_n = e_{n-1} (q^n - 1) q^(n-1) + (-1)^n q^(n(n-1)/2)
    with e_0 = 1.
    """
    e = 1
    for m in range(1, n + 1):
        e = e * (q**m - 1) * q ** (m - 1) + (-1) ** m * q ** (m * (m - 1) // 2)
    return e


def linear_derangement_reduced(q: int, n: int) -> int:
    """The quotient e_n / q^(n(n-1)/2): a_n = a_{n-1} (q^n - 1) + (-1)^n."""
    a = 1
    for m in range(1, n + 1):
        a = a * (q**m - 1) + (-1) ** m
    return a


def separable_class_count(q: int, n: int) -> int:
    """Number of square-free monic polynomials of degree n over F_q.

    Equals the number of conjugacy classes of n x n matrices whose
    characteristic polynomial is square-free: q for n = 1, and
    q^n - q^(n-1) for n >= 2.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return q
    return q**n - q ** (n - 1)


def gl_order_factored(q: int, n: int) -> int:
    """gl_order computed a second way: (q-1)^n * q^binom(n,2) * [n]_q!.

    Kept as an independent route for cross-checking the product formula.
    """
    return (q - 1) ** n * q ** comb(n, 2) * q_factorial(q, n)
