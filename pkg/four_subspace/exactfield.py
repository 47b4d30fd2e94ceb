"""Exact scalars: prime fields F_p and the rational numbers.

Raw field elements are plain Python values (``int`` residues in
``range(p)`` for a prime field, reduced ``Fraction`` for the rationals);
``Scalar`` wraps one together with its field for user-facing arithmetic.
"""

from __future__ import annotations

import itertools
import logging
import random
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from tokenize import TokenError
from typing import Optional, Union

import sympy

from .exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    ParseError,
    UnsupportedFieldError,
)
from .typing import Raw

logger = logging.getLogger(__name__)

T = sympy.Symbol('t')
# Largest degree for which irreducibility over Q is decided.
RATIONAL_DEGREE_LIMIT = 3

_SCALAR_PATTERN = re.compile(r'^-?[0-9]+(/[1-9][0-9]*)?$')


@dataclass(frozen=True)
class FieldSpec:
    """A computable base field.

    Args:
        p: The characteristic of a prime field, ``None`` for the rationals.
    """

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and (
            not isinstance(self.p, int) or not sympy.isprime(self.p)
        ):
            raise UnsupportedFieldError(
                f'Wrong parameter p={self.p!r}, expected a prime number.'
            )

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> Optional[int]:
        """Number of elements, ``None`` when infinite."""
        return self.p

    @property
    def zero(self) -> Raw:
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.is_prime else Fraction(1)

    def __str__(self) -> str:
        return f'F{self.p}' if self.is_prime else 'Q'

    def reduce(self, value: Union[Raw, Scalar, str]) -> Raw:
        """Coerces ``value`` to the canonical raw form of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f'Scalar over {value.field} used in {self}.'
                )
            return value.value
        if isinstance(value, str):
            return parse_scalar(value, self).value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldMismatchError(
                f'Cannot interpret {value!r} as an element of {self}.'
            )
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZeroError(
                    f'Denominator of {value} vanishes in {self}.'
                )
            return (
                value.numerator * pow(value.denominator, -1, self.p)
            ) % self.p
        return value % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p else -a

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZeroError(f'Inverse of zero in {self}.')
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator[Raw]:
        """Field elements in canonical order (0, 1, ..., p-1)."""
        if self.p is None:
            raise UnsupportedFieldError('The rationals cannot be enumerated.')
        return iter(range(self.p))

    def random_element(self, rng: random.Random, bound: int = 3) -> Raw:
        """Uniform over F_p; over Q an integer in ``[-bound, bound]``."""
        if self.p:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def scalar(self, value: Union[Raw, str]) -> Scalar:
        return Scalar(self, self.reduce(value))


RATIONALS = FieldSpec.rationals()


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    value: Raw

    def _other(self, other: Union[Scalar, int, Fraction]) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f'Cannot combine scalars over {self.field} '
                    f'and {other.field}.'
                )
            return other.value
        return self.field.reduce(other)

    def __add__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.sub(self.value, self._other(other)))

    def __rsub__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.sub(self._other(other), self.value))

    def __mul__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.div(self.value, self._other(other)))

    def __rtruediv__(self, other) -> Scalar:
        f = self.field
        return Scalar(f, f.div(self._other(other), self.value))

    def __neg__(self) -> Scalar:
        f = self.field
        return Scalar(f, f.neg(self.value))

    def inverse(self) -> Scalar:
        f = self.field
        return Scalar(f, f.inv(self.value))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        return format_scalar(self.value)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial in ``t``, coefficients lowest degree first."""

    field: FieldSpec
    coeffs: tuple[Raw, ...]

    def __post_init__(self):
        coeffs = [self.field.reduce(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_roots(cls, field: FieldSpec, *roots: Raw) -> Poly:
        result = cls(field, (1,))
        for root in roots:
            result = result * cls(field, (field.neg(field.reduce(root)), 1))
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: Poly):
        if other.field != self.field:
            raise FieldMismatchError(
                f'Polynomials over {self.field} and {other.field}.'
            )

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        f = self.field
        return Poly(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y))
        return Poly(self.field, tuple(out))

    def __str__(self) -> str:
        return format_poly(self)


def poly_power(p: Poly, s: int) -> Poly:
    """Returns ``p**s`` for a monic ``p``."""
    if s < 1:
        raise ValueError(f'Wrong parameter s={s}, expected s >= 1.')
    result = Poly(p.field, (1,))
    for _ in range(s):
        result = result * p
    return result


def to_sympy(p: Poly) -> sympy.Poly:
    coeffs = [
        sympy.Rational(c.numerator, c.denominator)
        if isinstance(c, Fraction)
        else c
        for c in reversed(p.coeffs)
    ] or [0]
    if p.field.is_prime:
        return sympy.Poly.from_list(coeffs, T, modulus=p.field.p)
    return sympy.Poly.from_list(coeffs, T, domain='QQ')


def from_sympy(poly: sympy.Poly, field: FieldSpec) -> Poly:
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        c = sympy.Rational(c)
        coeffs.append(field.reduce(Fraction(int(c.p), int(c.q))))
    return Poly(field, tuple(coeffs))


def is_irreducible(p: Poly, field: Optional[FieldSpec] = None) -> bool:
    """Whether ``p`` has no nontrivial factorization over its field."""
    field = field or p.field
    if field != p.field:
        raise FieldMismatchError(
            f'Polynomial over {p.field} tested in {field}.'
        )
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    if not field.is_prime and p.degree > RATIONAL_DEGREE_LIMIT:
        raise UnsupportedFieldError(
            f'Irreducibility over Q is only decided up to degree '
            f'{RATIONAL_DEGREE_LIMIT}, got degree {p.degree}.'
        )
    return bool(to_sympy(p).is_irreducible)


def monic_polynomials(field: FieldSpec, degree: int) -> Iterator[Poly]:
    for lower in itertools.product(field.elements(), repeat=degree):
        yield Poly(field, tuple(lower) + (1,))


@lru_cache(maxsize=None)
def monic_irreducibles(field: FieldSpec, degree: int) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of ``degree`` over F_p."""
    return tuple(
        p for p in monic_polynomials(field, degree) if is_irreducible(p)
    )


def parse_field(text: str) -> FieldSpec:
    """Parses a field flag, ``F<p>`` or ``Q``."""
    text = text.strip()
    if text == 'Q':
        return RATIONALS
    match = re.fullmatch(r'F([0-9]+)', text)
    if match is None:
        raise ParseError(f'Wrong field flag {text!r}, expected F<p> or Q.')
    try:
        return FieldSpec.prime(int(match.group(1)))
    except UnsupportedFieldError as err:
        raise ParseError(str(err)) from err


def format_field(field: FieldSpec) -> str:
    return str(field)


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    text = text.strip()
    if _SCALAR_PATTERN.match(text) is None:
        raise ParseError(f'Wrong scalar {text!r}.')
    if '/' in text and field.is_prime:
        num, den = text.split('/')
        value = Fraction(int(num), int(den))
    else:
        value = Fraction(text) if '/' in text else int(text)
    return Scalar(field, field.reduce(value))


def format_scalar(value: Raw) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def parse_poly(text: str, field: FieldSpec) -> Poly:
    """Parses text such as ``t^2+t+1`` into a polynomial over ``field``."""
    try:
        expr = sympy.parse_expr(text.replace('^', '**'), local_dict={'t': T})
        poly = sympy.Poly(expr, T)
    except (
        sympy.SympifyError,
        sympy.PolynomialError,
        SyntaxError,
        TokenError,
        TypeError,
    ) as err:
        raise ParseError(f'Wrong polynomial {text!r}.') from err
    if poly.free_symbols - {T}:
        raise ParseError(f'Wrong polynomial {text!r}, only t is allowed.')
    return from_sympy(poly, field)


def format_poly(p: Poly) -> str:
    if not p.coeffs:
        return '0'
    terms: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        negative = not p.field.is_prime and c < 0
        magnitude = format_scalar(-c if negative else c)
        if k == 0:
            body = magnitude
        else:
            power = 't' if k == 1 else f't^{k}'
            body = power if magnitude == '1' else f'{magnitude}*{power}'
        if terms:
            terms.append(('-' if negative else '+') + body)
        else:
            terms.append(('-' if negative else '') + body)
    return ''.join(terms)


def scalars(values: Sequence[Union[Raw, str]], field: FieldSpec) -> list[Raw]:
    return [field.reduce(v) for v in values]
