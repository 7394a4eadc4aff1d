"""Tests for canonical rational functions."""

from fractions import Fraction

import pytest
from hypothesis import assume
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from fixpoint_bounds.algebra import GEN
from fixpoint_bounds.algebra import ONE
from fixpoint_bounds.algebra import ONE_FUNCTION
from fixpoint_bounds.algebra import ZERO
from fixpoint_bounds.algebra import ZERO_FUNCTION
from fixpoint_bounds.algebra import LaurentPolynomial
from fixpoint_bounds.algebra import RationalFunction
from fixpoint_bounds.algebra import ratfun_add
from fixpoint_bounds.algebra import ratfun_constant_value
from fixpoint_bounds.algebra import ratfun_eval
from fixpoint_bounds.algebra import ratfun_mul
from fixpoint_bounds.algebra import ratfun_reduce
from fixpoint_bounds.errors import PoleError
from fixpoint_bounds.errors import ZeroDenominatorError

PROPERTY_EXAMPLES = 1000

polynomials = st.dictionaries(
    st.integers(0, 12), st.integers(-(10**6), 10**6), max_size=4
).map(LaurentPolynomial.from_mapping)
laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-(10**6), 10**6), max_size=4
).map(LaurentPolynomial.from_mapping)
nonzero_polynomials = polynomials.filter(lambda p: not p.is_zero)
points = st.fractions(min_value=-10, max_value=10, max_denominator=50).filter(bool)


@st.composite
def raw_functions(draw: st.DrawFn) -> RationalFunction:
    """Unreduced quotients with a nonzero denominator."""
    return RationalFunction(draw(laurents), draw(nonzero_polynomials))


functions = raw_functions().map(ratfun_reduce)


class TestCanonicalForm:
    """Test reduction to canonical form."""

    def test_common_factor_cancels(self) -> None:
        """(g^-1 - g) / (1 - g) is (1 + g) / g."""
        f = RationalFunction.of(LaurentPolynomial.monomial(-1) - GEN, 1 - GEN)
        g = RationalFunction.of(1 + GEN, GEN)
        assert f == g
        assert f.denominator == ONE
        assert f.numerator == LaurentPolynomial.monomial(-1) + 1

    def test_denominator_is_primitive_with_positive_constant(self) -> None:
        """Scalars move to the numerator."""
        f = RationalFunction.of(1, LaurentPolynomial.from_mapping({0: -2, 1: 4}))
        assert f.denominator == LaurentPolynomial.from_mapping({0: 1, 1: -2})
        assert f.numerator == LaurentPolynomial.constant(Fraction(-1, 2))

    def test_rational_coefficients_cleared_from_denominator(self) -> None:
        """A denominator with fractions becomes an integer polynomial."""
        den = LaurentPolynomial.from_mapping({0: Fraction(1, 2), 1: Fraction(1, 3)})
        f = RationalFunction.of(ONE, den)
        assert f.denominator == LaurentPolynomial.from_mapping({0: 3, 1: 2})
        assert f.numerator == LaurentPolynomial.constant(6)

    def test_powers_of_g_leave_the_denominator(self) -> None:
        """A monomial denominator turns into a negative exponent."""
        f = RationalFunction.of(ONE, LaurentPolynomial.monomial(3, 2))
        assert f == RationalFunction(LaurentPolynomial.monomial(-3, Fraction(1, 2)))

    def test_zero_numerator(self) -> None:
        """Zero reduces to 0/1."""
        assert RationalFunction.of(ZERO, 1 - GEN) == ZERO_FUNCTION

    def test_zero_denominator_rejected(self) -> None:
        """Both the raw constructor and the canonical one reject 0."""
        with pytest.raises(ZeroDenominatorError):
            RationalFunction(ONE, ZERO)
        with pytest.raises(ZeroDenominatorError):
            RationalFunction.of(1, 0)

    def test_zero_function_has_no_inverse(self) -> None:
        """Inverting zero is a zero denominator."""
        with pytest.raises(ZeroDenominatorError):
            ZERO_FUNCTION.inverse()


class TestConstantDetection:
    """Test recognition of constant functions."""

    def test_sphere_chi_zero_sum(self) -> None:
        """1/(1-g) + 1/(1-g^-1) is identically 1."""
        north = RationalFunction(ONE, 1 - GEN)
        south = RationalFunction(ONE, 1 - LaurentPolynomial.monomial(-1))
        assert ratfun_constant_value(ratfun_add(north, south)) == 1

    def test_non_constant(self) -> None:
        """1/(1-g) is not constant."""
        assert ratfun_constant_value(RationalFunction(ONE, 1 - GEN)) is None

    def test_g_power_is_not_constant(self) -> None:
        """g^-1 is a Laurent monomial, not a constant."""
        f = RationalFunction.of(LaurentPolynomial.monomial(-1))
        assert f.constant_value() is None

    def test_fractional_constant(self) -> None:
        """Constants may be fractions."""
        numerator = LaurentPolynomial.from_mapping({0: 3, 1: 3})
        f = RationalFunction.of(numerator, 2 + 2 * GEN)
        assert f.constant_value() == Fraction(3, 2)


class TestEvaluation:
    """Test exact evaluation."""

    def test_value(self) -> None:
        """(1 + g) / (1 - g) at 3 is -2."""
        assert ratfun_eval(RationalFunction.of(1 + GEN, 1 - GEN), 3) == -2

    def test_zero_is_a_pole(self) -> None:
        """g = 0 is never evaluated."""
        with pytest.raises(PoleError):
            ratfun_eval(ONE_FUNCTION, 0)

    def test_root_of_denominator(self) -> None:
        """1/(1 - g) has a pole at 1."""
        with pytest.raises(PoleError, match="pole"):
            ratfun_eval(RationalFunction(ONE, 1 - GEN), 1)

    def test_operators(self) -> None:
        """Operator sugar matches the functional API."""
        f = RationalFunction.of(1 + GEN, 1 - GEN)
        g = RationalFunction.of(GEN)
        assert f + g == ratfun_add(f, g)
        assert f * g == ratfun_mul(f, g)
        assert (f / g) * g == f
        assert f - f == ZERO_FUNCTION
        assert 1 - f == -(f - 1)


class TestWorkedExamples:
    """Small quotients whose canonical forms are known by hand."""

    def test_difference_of_squares(self) -> None:
        """(1 - g^2) / (1 - g) is 1 + g."""
        f = RationalFunction.of(1 - GEN**2, 1 - GEN)
        assert f == RationalFunction.of(1 + GEN)
        assert f.denominator == ONE

    def test_square_of_geometric_series(self) -> None:
        """(1 / (1 - g))^2 keeps the squared denominator."""
        f = RationalFunction.of(ONE, 1 - GEN)
        square = ratfun_mul(f, f)
        assert square.numerator == ONE
        assert square.denominator == LaurentPolynomial.from_mapping({0: 1, 1: -2, 2: 1})
        assert ratfun_constant_value(square) is None

    def test_constant_after_cancellation(self) -> None:
        """(2 - 2g^3) / (1 - g^3) is the constant 2."""
        f = RationalFunction.of(2 - 2 * GEN**3, 1 - GEN**3)
        assert ratfun_constant_value(f) == 2

    def test_sum_over_common_denominator(self) -> None:
        """g / (1 - g) + 1 / (1 - g) is (1 + g) / (1 - g)."""
        total = ratfun_add(
            RationalFunction(GEN, 1 - GEN), RationalFunction(ONE, 1 - GEN)
        )
        assert total == RationalFunction.of(1 + GEN, 1 - GEN)
        assert ratfun_constant_value(total) is None

    def test_square_at_three_halves(self) -> None:
        """g^2 at 3/2 is 9/4."""
        square = RationalFunction.of(GEN**2)
        assert ratfun_eval(square, Fraction(3, 2)) == Fraction(9, 4)


class TestFieldAxioms:
    """Randomized field axioms on canonical forms; equality is structural."""

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(raw_functions())
    def test_reduce_is_idempotent(self, f: RationalFunction) -> None:
        """Reducing twice changes nothing."""
        once = ratfun_reduce(f)
        assert ratfun_reduce(once) == once

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(raw_functions(), nonzero_polynomials)
    def test_common_factor_is_invisible(
        self, f: RationalFunction, h: LaurentPolynomial
    ) -> None:
        """Multiplying numerator and denominator by h gives the same canonical form."""
        scaled = RationalFunction(f.numerator * h, f.denominator * h)
        assert ratfun_reduce(scaled) == ratfun_reduce(f)

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(functions, functions)
    def test_commutativity(self, f: RationalFunction, g: RationalFunction) -> None:
        """a + b == b + a and a * b == b * a."""
        assert ratfun_add(f, g) == ratfun_add(g, f)
        assert ratfun_mul(f, g) == ratfun_mul(g, f)

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(functions, functions, functions)
    def test_associativity_and_distributivity(
        self, f: RationalFunction, g: RationalFunction, h: RationalFunction
    ) -> None:
        """Addition and multiplication associate; multiplication distributes."""
        assert ratfun_add(ratfun_add(f, g), h) == ratfun_add(f, ratfun_add(g, h))
        assert ratfun_mul(ratfun_mul(f, g), h) == ratfun_mul(f, ratfun_mul(g, h))
        assert ratfun_mul(f, ratfun_add(g, h)) == ratfun_add(
            ratfun_mul(f, g), ratfun_mul(f, h)
        )

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(functions)
    def test_inverses(self, f: RationalFunction) -> None:
        """Additive inverse always, multiplicative inverse for nonzero f."""
        assert ratfun_add(f, -f) == ZERO_FUNCTION
        assert ratfun_add(f, ZERO_FUNCTION) == f
        assert ratfun_mul(f, ONE_FUNCTION) == f
        if not f.is_zero:
            assert ratfun_mul(f, f.inverse()) == ONE_FUNCTION


class TestEvaluationConsistency:
    """Reduction and constant detection agree with evaluation."""

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(raw_functions(), points)
    def test_reduce_preserves_values(self, f: RationalFunction, x: Fraction) -> None:
        """eval(reduce(f), x) == eval(f, x) away from poles."""
        assume(f.denominator.evaluate(x) != 0)
        assert ratfun_eval(ratfun_reduce(f), x) == ratfun_eval(f, x)

    @settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
    @given(st.fractions(max_denominator=10**6), nonzero_polynomials, points)
    def test_constant_evaluates_to_itself(
        self, c: Fraction, h: LaurentPolynomial, x: Fraction
    ) -> None:
        """A quotient detected as the constant c evaluates to c."""
        f = RationalFunction(h.scale(c), h)
        assert ratfun_constant_value(f) == c
        assume(h.evaluate(x) != 0)
        assert ratfun_eval(f, x) == c
