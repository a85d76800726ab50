"""Finite field tables, polynomial arithmetic, and irreducible counts."""

from __future__ import annotations

import pytest

from qmcount.ffpoly import (
    FieldSpec,
    NotCoprime,
    ZeroPolynomial,
    build_field,
    cyclotomic_factor_degrees,
    divisors,
    euler_phi,
    field_for,
    irreducible_poly_count,
    moebius,
    multiplicative_order,
    poly_add,
    poly_degree,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_monic,
    poly_mul,
    poly_sub,
    poly_trim,
    squarefree_test,
)
from qmcount.qcount import separable_class_count


def all_monic(q: int, d: int):
    """Every monic polynomial of degree d over F_q, as coefficient tuples."""
    for code in range(q**d):
        yield tuple((code // q**i) % q for i in range(d)) + (1,)


def is_irreducible_by_trial_division(poly, field: FieldSpec) -> bool:
    d = poly_degree(poly)
    for e in range(1, d):
        for trial in all_monic(field.q, e):
            _, rem = poly_divmod(poly, trial, field)
            if not rem:
                return False
    return True


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    with pytest.raises(ValueError):
        divisors(0)


def test_moebius():
    assert moebius(1) == 1
    assert moebius(2) == -1
    assert moebius(4) == 0
    assert moebius(6) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(9) == 6
    assert euler_phi(12) == 4
    assert [euler_phi(m) for m in range(1, 9)] == [1, 1, 2, 2, 4, 2, 6, 4]


def test_irreducible_poly_count_values():
    assert irreducible_poly_count(2, 1) == 2
    assert irreducible_poly_count(2, 2) == 1
    assert irreducible_poly_count(2, 3) == 2
    assert irreducible_poly_count(2, 4) == 3
    assert irreducible_poly_count(2, 6) == 9
    assert irreducible_poly_count(3, 1) == 3
    assert irreducible_poly_count(3, 2) == 3
    for q in (2, 3, 4, 5):
        assert irreducible_poly_count(q, 1) == q


def test_irreducible_count_degree_sum():
    # every element of F_{q^n} has a minimal polynomial of degree dividing n
    for q in (2, 3, 4):
        for n in range(1, 11):
            total = sum(d * irreducible_poly_count(q, d) for d in divisors(n))
            assert total == q**n


def test_irreducible_count_matches_trial_division():
    for q in (2, 3):
        field = field_for(q)
        for d in range(1, 5):
            found = sum(
                1 for p in all_monic(q, d) if is_irreducible_by_trial_division(p, field)
            )
            assert found == irreducible_poly_count(q, d)


def test_multiplicative_order():
    assert multiplicative_order(2, 1) == 1
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 8) == 2
    assert multiplicative_order(4, 9) == 3
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 4)
    with pytest.raises(NotCoprime):
        multiplicative_order(3, 6)


def test_cyclotomic_factor_degrees():
    assert cyclotomic_factor_degrees(2, 3) == (1, 2)
    assert cyclotomic_factor_degrees(2, 7) == (1, 3, 3)
    assert cyclotomic_factor_degrees(3, 8) == (1, 1, 2, 2, 2)
    assert cyclotomic_factor_degrees(4, 3) == (1, 1, 1)
    for q in (2, 3, 5):
        assert cyclotomic_factor_degrees(q, 1) == (1,)
    with pytest.raises(NotCoprime):
        cyclotomic_factor_degrees(2, 6)


def test_cyclotomic_degrees_sum_and_linear_factors():
    from math import gcd

    for q in (2, 3, 4, 5):
        for k in range(1, 13):
            if gcd(q, k) != 1:
                continue
            degrees = cyclotomic_factor_degrees(q, k)
            assert sum(degrees) == k
            # linear factors <-> k-th roots of unity in F_q
            assert degrees.count(1) == gcd(k, q - 1)


def test_build_field_moduli():
    assert build_field(2, 1).modulus == (0, 1)
    assert build_field(2, 2).modulus == (1, 1, 1)
    assert build_field(3, 2).modulus == (1, 0, 1)
    assert field_for(4).q == 4
    with pytest.raises(ValueError):
        build_field(4, 1)
    with pytest.raises(ValueError):
        build_field(2, 0)


def test_field_spec_rejects_bad_modulus():
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # (z + 1)^2, reducible
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1))  # wrong degree
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1, 2))  # not monic


def test_field_axioms_brute_force():
    for q in (4, 9):
        f = field_for(q)
        elements = range(q)
        for a in elements:
            assert f.add(a, 0) == a
            assert f.mul(a, 1) == a
            assert f.add(a, f.neg(a)) == 0
            for b in elements:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                for c in elements:
                    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_field_inverses_and_pow():
    for q in (2, 3, 4, 5, 8, 9):
        f = field_for(q)
        for a in range(1, q):
            assert f.mul(a, f.inv(a)) == 1
            assert f.pow(a, q - 1) == 1
            assert f.pow(a, -1) == f.inv(a)
        assert f.pow(0, 3) == 0
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        # characteristic: adding 1 to itself p times returns to 0
        acc = 0
        for _ in range(f.p):
            acc = f.add(acc, 1)
        assert acc == 0
        assert f.sub(0, 1) == f.neg(1)


def test_poly_trim_and_degree():
    assert poly_trim([1, 2, 0, 0]) == (1, 2)
    assert poly_trim([0, 0]) == ()
    assert poly_degree(()) == -1
    assert poly_degree((5,)) == 0
    assert poly_degree((0, 0, 1)) == 2


def test_poly_arithmetic_over_prime_field():
    f = field_for(3)
    a = (2, 0, 1)  # z^2 + 2
    b = (1, 1)  # z + 1
    assert poly_add(a, b, f) == (0, 1, 1)
    assert poly_sub(a, a, f) == ()
    assert poly_mul(a, b, f) == (2, 2, 1, 1)
    assert poly_mul(a, (), f) == ()
    quo, rem = poly_divmod(a, b, f)
    assert quo == (2, 1)
    assert rem == ()
    assert poly_monic((2, 1, 2), f) == (1, 2, 1)


def test_poly_divmod_round_trip():
    for q in (2, 3, 4):
        f = field_for(q)
        for a in all_monic(q, 4):
            b = (1, 1, 1)
            quo, rem = poly_divmod(a, b, f)
            assert poly_degree(rem) < poly_degree(b)
            back = poly_add(poly_mul(quo, b, f), rem, f)
            assert back == poly_trim(a)
    with pytest.raises(ZeroPolynomial):
        poly_divmod((1, 1), (), field_for(2))


def test_poly_gcd():
    f = field_for(3)
    a = (2, 0, 1)  # (z + 1)(z + 2)
    b = (1, 2, 1)  # (z + 1)^2
    assert poly_gcd(a, b, f) == (1, 1)
    assert poly_gcd(a, (), f) == poly_monic(a, f)
    assert poly_gcd((2,), b, f) == (1,)
    with pytest.raises(ZeroPolynomial):
        poly_gcd((), (), f)


def test_poly_derivative():
    f2 = field_for(2)
    assert poly_derivative((0, 0, 1), f2) == ()  # d/dz z^2 = 2z = 0
    assert poly_derivative((0, 0, 0, 1), f2) == (0, 0, 1)  # d/dz z^3 = 3z^2 = z^2
    f3 = field_for(3)
    assert poly_derivative((1, 1, 1, 1), f3) == (1, 2)
    assert poly_derivative((2,), f3) == ()


def test_squarefree_test():
    f2 = field_for(2)
    assert squarefree_test((1, 1, 1), f2)  # z^2 + z + 1
    assert not squarefree_test((0, 0, 1), f2)  # z^2
    assert not squarefree_test((1, 0, 1), f2)  # (z + 1)^2
    assert squarefree_test((0, 1, 1), f2)  # z(z + 1)
    assert squarefree_test((1,), f2)
    with pytest.raises(ZeroPolynomial):
        squarefree_test((), f2)


def test_squarefree_monic_count_matches_class_count():
    for q in (2, 3):
        f = field_for(q)
        for n in range(1, 5):
            found = sum(1 for p in all_monic(q, n) if squarefree_test(p, f))
            assert found == separable_class_count(q, n)


def test_poly_eval():
    f3 = field_for(3)
    p = (1, 0, 1)  # z^2 + 1
    assert poly_eval(p, 0, f3) == 1
    assert poly_eval(p, 1, f3) == 2
    assert poly_eval(p, 2, f3) == 2
    assert poly_eval((), 2, f3) == 0
    f4 = field_for(4)
    # with modulus z^2 + z + 1 the element g = 2 satisfies g^2 = g + 1
    assert poly_eval((0, 1, 1), 2, f4) == 1  # g^2 + g = 1
