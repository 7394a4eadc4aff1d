"""Laurent polynomials in one indeterminate with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING
from typing import TypeAlias

import sympy
from sympy import QQ
from sympy import Poly

if TYPE_CHECKING:
    from collections.abc import Iterable
    from collections.abc import Mapping

BigRational: TypeAlias = Fraction
Scalar: TypeAlias = int | Fraction

# Indeterminate used when handing ordinary polynomials to sympy.
G = sympy.Symbol("g")


def to_rational(value: Scalar | str) -> BigRational:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    >>> to_rational("1532/3")
    Fraction(1532, 3)
    >>> to_rational(4)
    Fraction(4, 1)
    """
    if isinstance(value, bool):
        msg = "booleans are not rational numbers"
        raise TypeError(msg)
    return Fraction(value)


def format_rational(value: BigRational) -> str:
    """Render a rational exactly as ``p/q`` (``p`` when integral).

    >>> format_rational(Fraction(-4, 3))
    '-4/3'
    >>> format_rational(Fraction(92))
    '92'
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class LaurentPolynomial:
    """Finite sum of ``c * g**k`` with integer (possibly negative) ``k``.

    ``terms`` is sorted by exponent and never stores a zero coefficient, so
    the zero polynomial is ``terms == ()`` and equality is structural.
    """

    terms: tuple[tuple[int, BigRational], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, Scalar]) -> LaurentPolynomial:
        """Build from an exponent -> coefficient map, dropping zeros."""
        return cls(
            tuple(
                (int(k), Fraction(c))
                for k, c in sorted(coefficients.items())
                if c != 0
            )
        )

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, Scalar]]) -> LaurentPolynomial:
        """Build from (exponent, coefficient) pairs, summing repeated exponents."""
        acc: dict[int, Fraction] = {}
        for k, c in pairs:
            acc[k] = acc.get(k, Fraction(0)) + c
        return cls.from_mapping(acc)

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> LaurentPolynomial:
        """Return ``coefficient * g**exponent``."""
        return cls.from_mapping({exponent: coefficient})

    @classmethod
    def constant(cls, value: Scalar) -> LaurentPolynomial:
        """Return the constant polynomial ``value``."""
        return cls.from_mapping({0: value})

    @classmethod
    def from_poly(cls, poly: Poly) -> LaurentPolynomial:
        """Convert a univariate sympy polynomial back to a Laurent polynomial."""
        coeffs = poly.all_coeffs()
        top = len(coeffs) - 1
        return cls.from_mapping(
            {top - i: Fraction(int(c.p), int(c.q)) for i, c in enumerate(coeffs)}
        )

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.terms

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self.terms:
            msg = "the zero polynomial has no valuation"
            raise ValueError(msg)
        return self.terms[0][0]

    @property
    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient."""
        if not self.terms:
            msg = "the zero polynomial has no degree"
            raise ValueError(msg)
        return self.terms[-1][0]

    @property
    def is_constant(self) -> bool:
        """Whether only the ``g**0`` coefficient may be nonzero."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def coefficient(self, exponent: int) -> BigRational:
        """Coefficient of ``g**exponent`` (zero when absent)."""
        for k, c in self.terms:
            if k == exponent:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[int, BigRational]:
        """Return a fresh exponent -> coefficient dict."""
        return dict(self.terms)

    def shift(self, exponent: int) -> LaurentPolynomial:
        """Multiply by ``g**exponent``."""
        if exponent == 0:
            return self
        return LaurentPolynomial(tuple((k + exponent, c) for k, c in self.terms))

    def scale(self, factor: Scalar) -> LaurentPolynomial:
        """Multiply every coefficient by ``factor``."""
        if factor == 0:
            return LaurentPolynomial()
        return LaurentPolynomial(tuple((k, c * factor) for k, c in self.terms))

    def to_poly(self) -> Poly:
        """Convert to a sympy polynomial over QQ.

        Raises:
            ValueError: If a negative exponent is present; shift first.
        """
        if self.terms and self.valuation < 0:
            msg = "negative exponents cannot be handed to an ordinary polynomial"
            raise ValueError(msg)
        if not self.terms:
            return Poly.from_list([QQ(0)], G, domain=QQ)
        dense = [QQ(0)] * (self.degree + 1)
        for k, c in self.terms:
            dense[self.degree - k] = QQ(c.numerator, c.denominator)
        return Poly.from_list(dense, G, domain=QQ)

    def evaluate(self, x: Scalar) -> BigRational:
        """Exact value at ``g = x``.

        Raises:
            ZeroDivisionError: If ``x`` is zero and a negative exponent occurs.
        """
        x = Fraction(x)
        return sum((c * x**k for k, c in self.terms), Fraction(0))

    def __add__(self, other: LaurentPolynomial | Scalar) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        return LaurentPolynomial.from_mapping(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: LaurentPolynomial | Scalar) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPolynomial:
        return LaurentPolynomial.constant(other) - self

    def __mul__(self, other: LaurentPolynomial | Scalar) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            return self.scale(other)
        acc: dict[int, Fraction] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                acc[k1 + k2] = acc.get(k1 + k2, Fraction(0)) + c1 * c2
        return LaurentPolynomial.from_mapping(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            msg = "negative powers of a Laurent polynomial leave the ring"
            raise ValueError(msg)
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for k, c in self.terms:
            if k == 0:
                body = format_rational(c)
            else:
                power = "g" if k == 1 else f"g^{k}"
                if c == 1:
                    body = power
                elif c == -1:
                    body = f"-{power}"
                else:
                    body = f"{format_rational(c)}*{power}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
GEN = LaurentPolynomial.monomial(1)
