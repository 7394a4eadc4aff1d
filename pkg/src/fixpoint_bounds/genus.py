"""Chi-y genus of a circle action from its fixed-point weights.

For isolated fixed points the coefficient of ``y**i`` is the sum over fixed
points of ``sigma_i(g^w_1, ..., g^w_n) / prod_j (1 - g^w_j)``. For genuine
fixed-point data the sum collapses to the integer ``(-1)**i * N_i``; for
anything else it may stay a non-constant function of ``g``, which is reported
rather than raised.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING
from typing import NamedTuple

from .algebra import ONE
from .algebra import ZERO_FUNCTION
from .algebra import BigRational
from .algebra import LaurentPolynomial
from .algebra import RationalFunction
from .algebra import ratfun_add
from .algebra import ratfun_constant_value
from .algebra import ratfun_eval
from .algebra import ratfun_reduce
from .errors import NonConstantGenusError
from .fixed_points import n_profile
from .logging import get_logger
from .models import FixedPoint
from .models import FixedPointDataset
from .models import GenusReport
from .models import NProfile
from .models import Violation

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = get_logger(__name__)


class ChiNumber(NamedTuple):
    """One chi-y coefficient."""

    index: int
    value: int | None  # None unless the sum reduced to an integer constant
    function: RationalFunction  # reduced sum over all fixed points

    @property
    def constant(self) -> bool:
        """Whether the sum reduced to an integer."""
        return self.value is not None


class ChiVector(NamedTuple):
    """All coefficients ``(chi^0, ..., chi^n)``."""

    numbers: tuple[ChiNumber, ...]

    @property
    def values(self) -> tuple[int | None, ...]:
        """Integer values, ``None`` where reduction failed."""
        return tuple(c.value for c in self.numbers)

    @property
    def constancy_ok(self) -> tuple[bool, ...]:
        """Per-index constancy flags."""
        return tuple(c.constant for c in self.numbers)

    @property
    def constant(self) -> bool:
        """Whether every coefficient is an integer."""
        return all(self.constancy_ok)

    def integers(self) -> tuple[int, ...]:
        """Integer values.

        Raises:
            NonConstantGenusError: If some coefficient is not an integer.
        """
        bad = [c.index for c in self.numbers if c.value is None]
        if bad:
            msg = f"chi^i is not an integer constant for i in {bad}"
            raise NonConstantGenusError(msg)
        return tuple(c.value for c in self.numbers if c.value is not None)


def _unreduced_chi_term(point: FixedPoint, i: int) -> RationalFunction:
    weights = point.weights
    sigma = LaurentPolynomial.from_terms(
        (sum(subset), 1) for subset in combinations(weights, i)
    )
    denominator = ONE
    for w in weights:
        denominator = denominator * (ONE - LaurentPolynomial.monomial(w))
    return RationalFunction(sigma, denominator)


def chi_term(point: FixedPoint, i: int) -> RationalFunction:
    """Contribution of one fixed point to ``chi^i``, canonical.

    Args:
        point: Fixed point with nonzero weights
        i: Coefficient index, ``0 <= i <= n``

    Returns:
        ``sigma_i(g^w) / prod(1 - g^w)`` in canonical form
    """
    if not 0 <= i <= point.n:
        msg = f"chi index {i} outside 0..{point.n}"
        raise ValueError(msg)
    return ratfun_reduce(_unreduced_chi_term(point, i))


def chi_number(dataset: FixedPointDataset, i: int) -> ChiNumber:
    """Reduce the localization sum for ``chi^i``.

    The value is set only when the reduced sum is an integer constant; a
    non-constant or fractional sum is a certification signal carried in
    ``function``.
    """
    total = ZERO_FUNCTION
    for point in dataset.points:
        total = ratfun_add(total, chi_term(point, i))
    constant = ratfun_constant_value(total)
    value: int | None = None
    if constant is not None and constant.denominator == 1:
        value = int(constant)
    else:
        logger.debug(
            "chi^%d of %s did not reduce: %s", i, dataset.display_name, total
        )
    return ChiNumber(index=i, value=value, function=total)


def chi_vector(dataset: FixedPointDataset) -> ChiVector:
    """Apply :func:`chi_number` for ``i = 0..n``."""
    return ChiVector(tuple(chi_number(dataset, i) for i in range(dataset.n + 1)))


def sample_points(count: int, seed: int) -> list[Fraction]:
    """Deterministic pseudo-random rationals avoiding 0 and +-1.

    Every weight is nonzero, so ``1 - x**w`` only vanishes at ``x = +-1``.
    """
    rng = random.Random(seed)  # noqa: S311
    chosen: list[Fraction] = []
    while len(chosen) < count:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if x not in {0, 1, -1} and x not in chosen:
            chosen.append(x)
    return chosen


def chi_samples(
    dataset: FixedPointDataset, i: int, xs: Sequence[BigRational]
) -> list[BigRational]:
    """Evaluate the unreduced ``chi^i`` sum at each point of ``xs``.

    A pre-filter and consistency witness only; constancy is decided by
    :func:`chi_number`.
    """
    terms = [_unreduced_chi_term(p, i) for p in dataset.points]
    return [sum((ratfun_eval(t, x) for t in terms), Fraction(0)) for x in xs]


def chi_y(chi: ChiVector, y: BigRational | int) -> BigRational:
    """Evaluate ``sum_i chi^i * y**i``.

    Raises:
        NonConstantGenusError: If some coefficient is not an integer.
    """
    y = Fraction(y)
    return sum(
        (value * y**i for i, value in enumerate(chi.integers())), Fraction(0)
    )


def todd_genus(chi: ChiVector) -> int:
    """Todd genus, ``chi_y`` at ``y = 0``."""
    return int(chi_y(chi, 0))


def euler_number(chi: ChiVector) -> int:
    """Euler number, ``chi_y`` at ``y = -1``."""
    return int(chi_y(chi, -1))


def signature(chi: ChiVector) -> int:
    """Signature, ``chi_y`` at ``y = 1``; informational only."""
    return int(chi_y(chi, 1))


def profile_violations(profile: NProfile, point_count: int) -> list[Violation]:
    """Conditions on ``(N_0, ..., N_n)`` that need no chi-y reduction.

    ``N_i == N_{n-i}``, ``N_i >= 0`` and ``sum N_i == point_count``.
    """
    violations: list[Violation] = []
    n = profile.n
    for i in range(n // 2 + 1):
        if profile[i] != profile[n - i]:
            violations.append(
                Violation(
                    kind="asymmetric-profile",
                    detail=f"N_{i} = {profile[i]} but N_{n - i} = {profile[n - i]}",
                    witness={"profile": str(profile)},
                )
            )
    if any(c < 0 for c in profile.counts):
        violations.append(
            Violation(kind="negative-count", detail="some N_i is negative")
        )
    if profile.total != point_count:
        violations.append(
            Violation(
                kind="count-mismatch",
                detail=f"sum N_i = {profile.total} but there are {point_count} points",
            )
        )
    return violations


def check_chi_structure(
    dataset: FixedPointDataset, chi: ChiVector | None = None
) -> list[Violation]:
    """Check the chi-y coefficients against the N-profile.

    Verifies ``chi^i == (-1)**i N_i`` together with :func:`profile_violations`;
    an empty list means all hold. A coefficient that does not reduce to an
    integer is a violation too.
    """
    chi = chi if chi is not None else chi_vector(dataset)
    profile = n_profile(dataset)
    violations: list[Violation] = []

    for number in chi.numbers:
        expected = (-1) ** number.index * profile[number.index]
        if number.value is None:
            violations.append(
                Violation(
                    kind="non-constant",
                    detail=f"chi^{number.index} does not reduce to an integer",
                    witness={"i": str(number.index), "reduced": str(number.function)},
                )
            )
        elif number.value != expected:
            violations.append(
                Violation(
                    kind="chi-mismatch",
                    detail=f"chi^{number.index} = {number.value} "
                    f"but (-1)^i N_i = {expected}",
                    witness={
                        "i": str(number.index),
                        "chi": str(number.value),
                        "expected": str(expected),
                    },
                )
            )
    violations.extend(profile_violations(profile, dataset.point_count))
    return violations


def genus_report(dataset: FixedPointDataset) -> GenusReport:
    """Chi-vector, N-profile and derived invariants of ``dataset``."""
    chi = chi_vector(dataset)
    constant = chi.constant
    return GenusReport(
        label=dataset.display_name,
        n=dataset.n,
        chi=chi.values,
        profile=n_profile(dataset).counts,
        todd=todd_genus(chi) if constant else None,
        euler=euler_number(chi) if constant else None,
        signature=signature(chi) if constant else None,
        non_constant={
            str(c.index): str(c.function) for c in chi.numbers if not c.constant
        },
        warnings=dataset.warnings,
    )
