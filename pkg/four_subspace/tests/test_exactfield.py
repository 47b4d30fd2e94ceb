from fractions import Fraction

import pytest

from four_subspace.exactfield import (
    RATIONALS,
    FieldSpec,
    Poly,
    format_poly,
    is_irreducible,
    monic_irreducibles,
    parse_field,
    parse_poly,
    parse_scalar,
    poly_power,
)
from four_subspace.exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    ParseError,
    UnsupportedFieldError,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F5 = FieldSpec(5)


def test_prime_field_checks_characteristic():
    with pytest.raises(UnsupportedFieldError):
        FieldSpec(4)
    assert F5.order == 5
    assert RATIONALS.order is None


def test_scalar_arithmetic():
    a, b = F5.scalar(3), F5.scalar(4)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert (a / b).value == 2
    assert (-a).value == 2
    assert a.inverse().value == 2
    half = RATIONALS.scalar('1/2')
    assert (half + half).value == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        F3.scalar(0).inverse()
    with pytest.raises(DivisionByZeroError):
        F5.reduce(Fraction(1, 5))


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        F3.scalar(1) + F5.scalar(1)


@pytest.mark.parametrize(
    'text, expected',
    [('F2', F2), ('F5', F5), ('Q', RATIONALS)],
)
def test_parse_field(text, expected):
    assert parse_field(text) == expected
    assert str(expected) == text


@pytest.mark.parametrize('text', ['F4', 'F', 'R', 'F2.0'])
def test_parse_field_errors(text):
    with pytest.raises(ParseError):
        parse_field(text)


def test_parse_scalar():
    assert parse_scalar('1/2', F5).value == 3
    assert parse_scalar('-1', F3).value == 2
    assert parse_scalar('-3/4', RATIONALS).value == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_scalar('1.5', RATIONALS)
    with pytest.raises(DivisionByZeroError):
        parse_scalar('1/3', F3)


def test_polynomials():
    p = parse_poly('t^2+t+1', F2)
    assert p.coeffs == (1, 1, 1)
    assert p.degree == 2
    assert format_poly(p) == 't^2+t+1'
    assert format_poly(parse_poly('t - 1', RATIONALS)) == 't-1'
    assert poly_power(Poly(F2, (1, 1)), 2).coeffs == (1, 0, 1)
    assert Poly.from_roots(F3, 1, 2).coeffs == (2, 0, 1)


def test_parse_poly_errors():
    with pytest.raises(ParseError):
        parse_poly('x + 1', F2)
    with pytest.raises(ParseError):
        parse_poly('t +', F2)


def test_irreducibility():
    assert is_irreducible(parse_poly('t^2+t+1', F2))
    assert not is_irreducible(parse_poly('t^2+1', F2))
    assert not is_irreducible(parse_poly('t^2-1', RATIONALS))
    assert is_irreducible(parse_poly('t^2-2', RATIONALS))


@pytest.mark.parametrize(
    'field, degree, count',
    [(F2, 1, 2), (F2, 2, 1), (F2, 3, 2), (F3, 1, 3), (F3, 2, 3)],
)
def test_monic_irreducible_counts(field, degree, count):
    polys = monic_irreducibles(field, degree)
    assert len(polys) == count
    assert all(p.is_monic and p.degree == degree for p in polys)
