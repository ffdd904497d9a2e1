"""Field arithmetic: cyclotomic polynomials, canonical forms, axioms, grammar."""

import random
from fractions import Fraction

import pytest

from fatpoints import (
    FieldMismatchError,
    QQ,
    cyclotomic_polynomial,
    make_field,
    parse_scalar,
    primitive_root,
    render_scalar,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_make_field():
    f3 = make_field("cyclotomic", 3)
    assert f3.degree == 2
    assert f3.modulus == (1, 1, 1)
    f6 = make_field("cyclotomic", 6)
    assert f6.modulus == (1, -1, 1)
    assert make_field("rational").kind == "rational"
    with pytest.raises(ValueError):
        make_field("cyclotomic", 0)
    with pytest.raises(ValueError):
        make_field("cyclotomic")


def test_conductors_one_and_two_collapse_to_rational_values():
    for n, expected in ((1, 1), (2, -1)):
        f = make_field("cyclotomic", n)
        assert f.degree == 1
        z = primitive_root(f)
        assert z == f.scalar(expected)
        assert z.is_rational()


def test_scalar_arith_examples():
    half = QQ.scalar(Fraction(2, 4))
    assert half + QQ.scalar(Fraction(1, 4)) == QQ.scalar(Fraction(3, 4))
    f3 = make_field("cyclotomic", 3)
    z = primitive_root(f3)
    assert (z * z + z + 1).is_zero()
    f5 = make_field("cyclotomic", 5)
    z5 = primitive_root(f5)
    assert z5.inverse() == z5**4
    assert (z5**5) == f5.one


def test_primitive_root_orders():
    for n in range(1, 13):
        f = make_field("cyclotomic", n)
        z = primitive_root(f)
        assert z**n == f.one
        for k in range(1, n):
            assert z**k != f.one
    with pytest.raises(ValueError):
        primitive_root(QQ)


def test_division_by_zero_is_distinct():
    with pytest.raises(ZeroDivisionError):
        QQ.zero.inverse()
    f3 = make_field("cyclotomic", 3)
    with pytest.raises(ZeroDivisionError):
        f3.zero.inverse()


def test_mixed_fields_rejected():
    f3 = make_field("cyclotomic", 3)
    f5 = make_field("cyclotomic", 5)
    with pytest.raises(FieldMismatchError):
        primitive_root(f3) + primitive_root(f5)
    with pytest.raises(FieldMismatchError):
        QQ.one * primitive_root(f3)


def _random_scalar(field, rng):
    coeffs = [
        Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(field.degree)
    ]
    return field.from_coeffs(coeffs)


@pytest.mark.parametrize("spec", [("rational", 1), ("cyclotomic", 3), ("cyclotomic", 5)])
def test_field_axioms_on_random_triples(spec):
    kind, n = spec
    field = make_field(kind, n) if kind == "cyclotomic" else QQ
    rng = random.Random(f"axioms:{kind}:{n}")
    for _ in range(1000):
        a = _random_scalar(field, rng)
        b = _random_scalar(field, rng)
        c = _random_scalar(field, rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == field.one


def test_canonical_form_idempotent():
    f3 = make_field("cyclotomic", 3)
    rng = random.Random("canon")
    for _ in range(200):
        raw = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)]
        once = f3.from_coeffs(raw)
        twice = f3.from_coeffs(once.coeffs)
        assert once == twice
        assert len(once.coeffs) == f3.degree


def test_scalar_text_grammar():
    f3 = make_field("cyclotomic", 3)
    # z^2 reduces to -1-z over Q(zeta_3), so 1 - z^2 = 2 + z
    assert parse_scalar(f3, "1-z^2") == f3.from_coeffs([2, 1])
    assert parse_scalar(f3, "-2/3*z") == f3.from_coeffs([0, Fraction(-2, 3)])
    assert parse_scalar(f3, "z") == primitive_root(f3)
    assert parse_scalar(QQ, "-2/3") == QQ.scalar(Fraction(-2, 3))
    assert parse_scalar(QQ, "7") == QQ.scalar(7)
    with pytest.raises(ValueError):
        parse_scalar(QQ, "z")
    with pytest.raises(ValueError):
        parse_scalar(QQ, "1//2")
    with pytest.raises(ValueError):
        parse_scalar(f3, "")
    with pytest.raises(ValueError):
        parse_scalar(f3, "q+1")


def test_render_parse_round_trip():
    f5 = make_field("cyclotomic", 5)
    rng = random.Random("roundtrip")
    for _ in range(300):
        s = _random_scalar(f5, rng)
        assert parse_scalar(f5, render_scalar(s)) == s
    for _ in range(100):
        s = _random_scalar(QQ, rng)
        assert parse_scalar(QQ, render_scalar(s)) == s
