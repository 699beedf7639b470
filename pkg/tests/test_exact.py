"""exact-core: rational parsing, polynomial arithmetic, prime fields."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymgauss import (BadPrimeError, FIELD_PRIMES, Poly, PrimeField, format_rational,
                       parse_rational, poly_derivative, poly_div_linear, poly_from_roots)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(rationals, max_size=21).map(Poly)


# -- rational literals -------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("3/4", Fraction(3, 4)),
    ("-7", Fraction(-7)),
    ("+5", Fraction(5)),
    ("−5/9", Fraction(-5, 9)),   # unicode minus
    ("  10/4 ", Fraction(5, 2)),
    (3, Fraction(3)),
    (Fraction(2, 6), Fraction(1, 3)),
])
def test_parse_rational_accepts_exact_literals(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["1.5", "3.0", "1e3", "a", "1/2/3", "1/0", 0.5, None])
def test_parse_rational_rejects_non_rationals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational_roundtrip():
    for x in (Fraction(3, 4), Fraction(-7), Fraction(0), Fraction(22, 7)):
        assert parse_rational(format_rational(x)) == x


def test_canonical_form_idempotent():
    x = Fraction(-6, -4)
    assert (x.numerator, x.denominator) == (3, 2)
    again = Fraction(x.numerator, x.denominator)
    assert (again.numerator, again.denominator) == (x.numerator, x.denominator)
    assert Fraction(0, 7) == Fraction(0, 1)


# -- polynomial examples ----------------------------------------------

def test_derivative_power_rule():
    p = Poly([1, -3, 1])            # t^2 - 3t + 1
    assert poly_derivative(p) == Poly([-3, 2])


def test_derivative_of_constant_is_zero():
    assert poly_derivative(Poly.constant(5)) == Poly.zero()
    assert poly_derivative(Poly.zero()) == Poly.zero()


def test_derivative_of_quadratic_from_roots():
    m = poly_from_roots([1, 2])     # t^2 - 3t + 2
    assert m == Poly([2, -3, 1])
    dm = poly_derivative(m)
    assert dm == Poly([-3, 2])
    assert dm(1) == -1              # M'(1) for M = (t-1)(t-2)


def test_derivative_drops_degree_by_one():
    p = poly_from_roots([1, 2, 3, 4, 5])
    assert poly_derivative(p).degree == p.degree - 1


def test_from_roots_empty_product_is_one():
    assert poly_from_roots([]) == Poly.constant(1)


def test_from_roots_expansion():
    assert poly_from_roots([1, 2]) == Poly([2, -3, 1])


def test_from_roots_value_at_zero():
    # product of the negated roots
    assert poly_from_roots([1, 2, 3, 4])(0) == 24


def test_div_linear_factorization():
    p = Poly([2, -3, 1])
    assert poly_div_linear(p, 1) == Poly([-2, 1])


def test_div_linear_rejects_non_root():
    with pytest.raises(ValueError, match="not a root"):
        poly_div_linear(Poly([2, -3, 1]), 5)


def test_div_linear_matches_root_removal():
    p = poly_from_roots([1, 2, 3, 4])
    assert poly_div_linear(p, 3) == poly_from_roots([1, 2, 4])


def test_poly_is_immutable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (Fraction(0),)


def test_padded_rejects_overflow():
    with pytest.raises(ValueError):
        Poly([1, 2, 3]).padded(2)


# -- polynomial properties ---------------------------------------------

@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_product_rule(p, q):
    left = poly_derivative(p * q)
    right = poly_derivative(p) * q + p * poly_derivative(q)
    assert left == right


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=8), st.data())
def test_div_linear_inverts_from_roots(roots, data):
    r = data.draw(st.sampled_from(roots))
    rest = list(roots)
    rest.remove(r)
    assert poly_div_linear(poly_from_roots(roots), r) == poly_from_roots(rest)


@settings(max_examples=40, deadline=None)
@given(polys, rationals)
def test_evaluation_is_ring_morphism(p, x):
    q = Poly([1, 1])                # t + 1
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


# -- prime field --------------------------------------------------------

def test_prime_list_shape():
    assert len(FIELD_PRIMES) == len(set(FIELD_PRIMES)) == 25
    assert all(2**30 < p < 2**31 for p in FIELD_PRIMES)
    assert list(FIELD_PRIMES) == sorted(FIELD_PRIMES)


def test_prime_list_entries_are_prime():
    sympy = pytest.importorskip("sympy")
    assert all(sympy.isprime(p) for p in FIELD_PRIMES)


@settings(max_examples=80, deadline=None)
@given(rationals, rationals)
def test_reduction_commutes_with_ring_ops(a, b):
    field = PrimeField(FIELD_PRIMES[0])
    assert field.reduce(a * b) == field.mul(field.reduce(a), field.reduce(b))
    assert field.reduce(a + b) == field.add(field.reduce(a), field.reduce(b))


def test_reduce_bad_prime():
    p = FIELD_PRIMES[3]
    field = PrimeField(p)
    with pytest.raises(BadPrimeError):
        field.reduce(Fraction(1, p))


def test_field_inverse():
    field = PrimeField(FIELD_PRIMES[1])
    assert field.mul(field.inv(123456), 123456) == 1
    with pytest.raises(ZeroDivisionError):
        field.inv(0)


def test_small_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(97)
