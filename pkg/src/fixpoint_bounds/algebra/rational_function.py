"""Univariate rational functions with a canonical reduced form.

Canonical form of ``N / D``:

* ``D`` is an ordinary polynomial in ``g`` with nonzero constant term,
* ``gcd(N, D) = 1`` once ``N`` is cleared of its power of ``g``,
* ``D`` has integer coefficients with content 1 and a positive constant term,
* ``N`` is a Laurent polynomial carrying any rational scalar.

Two routes to the same function therefore store identical representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PoleError
from ..errors import ZeroDenominatorError
from .laurent import ONE
from .laurent import ZERO
from .laurent import BigRational
from .laurent import LaurentPolynomial
from .laurent import Scalar


@dataclass(frozen=True, slots=True)
class RationalFunction:
    """Quotient of two Laurent polynomials in ``g``.

    The constructor stores exactly what it is given; use :func:`ratfun_reduce`
    or :meth:`of` to obtain the canonical form. Arithmetic always returns
    canonical values.
    """

    numerator: LaurentPolynomial
    denominator: LaurentPolynomial = ONE

    def __post_init__(self) -> None:
        if self.denominator.is_zero:
            msg = f"rational function {self.numerator} / 0 has a zero denominator"
            raise ZeroDenominatorError(msg)

    @classmethod
    def of(
        cls,
        numerator: LaurentPolynomial | Scalar,
        denominator: LaurentPolynomial | Scalar = 1,
    ) -> RationalFunction:
        """Canonical ``numerator / denominator``."""
        if not isinstance(numerator, LaurentPolynomial):
            numerator = LaurentPolynomial.constant(numerator)
        if not isinstance(denominator, LaurentPolynomial):
            denominator = LaurentPolynomial.constant(denominator)
        if denominator.is_zero:
            msg = f"rational function {numerator} / 0 has a zero denominator"
            raise ZeroDenominatorError(msg)
        return ratfun_reduce(cls(numerator, denominator))

    @property
    def is_zero(self) -> bool:
        """Whether the numerator vanishes."""
        return self.numerator.is_zero

    def constant_value(self) -> BigRational | None:
        """Shortcut for :func:`ratfun_constant_value`."""
        return ratfun_constant_value(self)

    def evaluate(self, x: Scalar) -> BigRational:
        """Shortcut for :func:`ratfun_eval`."""
        return ratfun_eval(self, x)

    def inverse(self) -> RationalFunction:
        """Multiplicative inverse.

        Raises:
            ZeroDenominatorError: For the zero function.
        """
        return RationalFunction.of(self.denominator, self.numerator)

    def __add__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return ratfun_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return ratfun_add(self, -_lift(other))

    def __rsub__(self, other: Scalar) -> RationalFunction:
        return ratfun_add(_lift(other), -self)

    def __mul__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return ratfun_mul(self, _lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return ratfun_mul(self, _lift(other).inverse())

    def __str__(self) -> str:
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def _lift(value: RationalFunction | Scalar) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(LaurentPolynomial.constant(value))


def ratfun_reduce(f: RationalFunction) -> RationalFunction:
    """Bring ``f`` to canonical form; idempotent.

    Raises:
        ZeroDenominatorError: If the denominator is zero.
    """
    num, den = f.numerator, f.denominator
    if den.is_zero:
        msg = "cannot reduce a rational function with zero denominator"
        raise ZeroDenominatorError(msg)
    if num.is_zero:
        return ZERO_FUNCTION

    # Clear g from the denominator, then pull it out of the numerator so that
    # both sides are ordinary polynomials coprime to g.
    shift = -den.valuation
    den = den.shift(shift)
    num = num.shift(shift)
    power = num.valuation
    num = num.shift(-power)

    p, d = num.to_poly(), den.to_poly()
    common = p.gcd(d)
    if common.degree() > 0:
        p, d = p.exquo(common), d.exquo(common)

    _, d_int = d.clear_denoms(convert=True)
    _, d_prim = d_int.primitive()
    if d_prim.TC() < 0:
        d_prim = -d_prim
    lead = d.LC()
    prim_lead = d_prim.LC()
    factor = Fraction(int(prim_lead)) / Fraction(int(lead.p), int(lead.q))

    numerator = LaurentPolynomial.from_poly(p).scale(factor).shift(power)
    return RationalFunction(numerator, LaurentPolynomial.from_poly(d_prim))


def ratfun_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Canonical sum of two rational functions."""
    if a.is_zero:
        return ratfun_reduce(b)
    if b.is_zero:
        return ratfun_reduce(a)
    if a.denominator == b.denominator:
        return ratfun_reduce(
            RationalFunction(a.numerator + b.numerator, a.denominator)
        )
    return ratfun_reduce(
        RationalFunction(
            a.numerator * b.denominator + b.numerator * a.denominator,
            a.denominator * b.denominator,
        )
    )


def ratfun_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Canonical product of two rational functions."""
    if a.is_zero or b.is_zero:
        return ZERO_FUNCTION
    return ratfun_reduce(
        RationalFunction(a.numerator * b.numerator, a.denominator * b.denominator)
    )


def ratfun_constant_value(f: RationalFunction) -> BigRational | None:
    """Return the constant ``c`` if ``f == c`` identically, else ``None``.

    ``None`` is the non-constant verdict; it is not an error.
    """
    reduced = ratfun_reduce(f)
    if reduced.denominator == ONE and reduced.numerator.is_constant:
        return reduced.numerator.coefficient(0)
    return None


def ratfun_eval(f: RationalFunction, x: Scalar) -> BigRational:
    """Exact value of ``f`` at ``g = x``.

    Raises:
        PoleError: If ``x`` is zero or the denominator vanishes at ``x``.
    """
    x = Fraction(x)
    if x == 0:
        msg = "rational functions in g are not evaluated at g = 0"
        raise PoleError(msg)
    below = f.denominator.evaluate(x)
    if below == 0:
        msg = f"g = {x} is a pole of {f}"
        raise PoleError(msg)
    return f.numerator.evaluate(x) / below


ZERO_FUNCTION = RationalFunction(ZERO, ONE)
ONE_FUNCTION = RationalFunction(ONE, ONE)
