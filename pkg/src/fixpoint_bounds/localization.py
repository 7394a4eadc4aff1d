"""Localization of Chern-class monomials at isolated fixed points.

At a fixed point ``p`` the equivariant class ``c_k`` restricts to
``sigma_k(w_p) t^k`` and the equivariant Euler class of the tangent space is
``prod(w_p) t^n``. Every summand of a localized integral is therefore a
rational number times a common power of ``t``; the power is tracked by the
monomial degree and never materialized.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING
from typing import NamedTuple

from .algebra import format_rational
from .errors import PreconditionError
from .fixed_points import weight_product
from .fixed_points import weight_sum
from .models import ChernEntry
from .models import ChernMonomial
from .models import ChernTable
from .models import FixedPointDataset
from .models import NProfile
from .models import Violation

if TYPE_CHECKING:
    from collections.abc import Iterator


PAIRING_POINT_COUNT = 4
PAIRING_MIN_N = 4


@lru_cache(maxsize=65536)
def elementary_symmetric(weights: tuple[int, ...]) -> tuple[int, ...]:
    """``(sigma_0, ..., sigma_n)`` of the weights.

    >>> elementary_symmetric((1, 2, -3))
    (1, 0, -7, -6)
    """
    return tuple(
        sum(math.prod(subset) for subset in combinations(weights, k))
        for k in range(len(weights) + 1)
    )


def chern_class_at_point(weights: tuple[int, ...], k: int) -> int:
    """Coefficient of ``t^k`` in ``c_k`` restricted to the point."""
    if not 0 <= k <= len(weights):
        msg = f"c_{k} does not exist on a {2 * len(weights)}-manifold"
        raise ValueError(msg)
    return elementary_symmetric(weights)[k]


def _exponent_vectors(remaining: int, k: int, n: int) -> Iterator[tuple[int, ...]]:
    if k > n:
        if remaining == 0:
            yield ()
        return
    for j in range(remaining // k, -1, -1):
        for rest in _exponent_vectors(remaining - j * k, k + 1, n):
            yield (j, *rest)


def chern_monomials(n: int, degree: int) -> list[ChernMonomial]:
    """All monomials in ``c_1..c_n`` of the given degree.

    Ordered lexicographically descending on ``(j_1, ..., j_n)``, so
    ``c_1^n`` comes first and ``c_n`` last.

    >>> [str(m) for m in chern_monomials(3, 3)]
    ['c1^3', 'c1*c2', 'c3']
    """
    return [
        ChernMonomial(exponents=vector) for vector in _exponent_vectors(degree, 1, n)
    ]


def abbv_integrate(dataset: FixedPointDataset, monomial: ChernMonomial) -> Fraction:
    """Localized value of ``monomial`` over the whole manifold.

    For ``degree == n`` this is the candidate Chern number; for smaller
    degrees genuine data gives zero, but the raw sum is returned and judged by
    :func:`vanishing_check`.

    Raises:
        PreconditionError: If the monomial degree exceeds ``n`` or its length
            does not match the dataset.
    """
    if monomial.n != dataset.n:
        msg = (
            f"monomial {monomial} has {monomial.n} exponents, "
            f"dataset has n = {dataset.n}"
        )
        raise PreconditionError(msg)
    if monomial.degree > dataset.n:
        msg = f"degree of {monomial} exceeds n = {dataset.n}"
        raise PreconditionError(msg)
    total = Fraction(0)
    for weights in dataset.weight_vectors():
        sigma = elementary_symmetric(weights)
        numerator = math.prod(
            sigma[k] ** j for k, j in enumerate(monomial.exponents, start=1) if j
        )
        total += Fraction(numerator, sigma[-1])
    return total


def chern_table(dataset: FixedPointDataset) -> ChernTable:
    """Localized values of every degree-n monomial, in monomial order."""
    return ChernTable(
        n=dataset.n,
        entries=tuple(
            ChernEntry(monomial=m, value=abbv_integrate(dataset, m))
            for m in chern_monomials(dataset.n, dataset.n)
        ),
    )


def integrality_check(table: ChernTable) -> list[Violation]:
    """Every Chern number of a closed almost complex manifold is an integer."""
    return [
        Violation(
            kind="non-integral",
            detail=f"{entry.monomial} = {format_rational(entry.value)}",
            witness={
                "monomial": str(entry.monomial),
                "value": format_rational(entry.value),
            },
        )
        for entry in table.entries
        if entry.value.denominator != 1
    ]


def vanishing_check(dataset: FixedPointDataset) -> list[Violation]:
    """Localized integrals of degree below ``n`` must vanish exactly."""
    violations: list[Violation] = []
    for degree in range(dataset.n):
        for monomial in chern_monomials(dataset.n, degree):
            value = abbv_integrate(dataset, monomial)
            if value != 0:
                violations.append(
                    Violation(
                        kind="non-vanishing",
                        detail=f"degree-{degree} integral of {monomial} = "
                        f"{format_rational(value)}",
                        witness={
                            "monomial": str(monomial),
                            "value": format_rational(value),
                        },
                    )
                )
    return violations


def _require_pairing_regime(dataset: FixedPointDataset) -> None:
    if dataset.point_count != PAIRING_POINT_COUNT or dataset.n < PAIRING_MIN_N:
        msg = (
            f"needs exactly 4 fixed points and n >= 4, got "
            f"{dataset.point_count} points with n = {dataset.n}"
        )
        raise PreconditionError(msg)


def c1sq_divisibility_check(dataset: FixedPointDataset) -> list[Violation]:
    """With 4 fixed points and ``n >= 4``, Chern numbers with ``j_1 >= 2`` vanish.

    Raises:
        PreconditionError: Outside the 4-point, ``n >= 4`` regime.
    """
    _require_pairing_regime(dataset)
    violations: list[Violation] = []
    for monomial in chern_monomials(dataset.n, dataset.n):
        if monomial.c1_power < 2:  # noqa: PLR2004
            continue
        value = abbv_integrate(dataset, monomial)
        if value != 0:
            violations.append(
                Violation(
                    kind="c1-square-nonzero",
                    detail=f"{monomial} = {format_rational(value)} with a c1^2 factor",
                    witness={
                        "monomial": str(monomial),
                        "value": format_rational(value),
                    },
                )
            )
    return violations


def gs_chern_number(profile: NProfile, n: int) -> int:
    """``c_1 c_{n-1}`` from the N-profile alone.

    Sum of ``N_i * (6 i (i - 1) + (5 n - 3 n^2) / 2)``, computed in exact
    rationals.

    >>> gs_chern_number(NProfile(counts=(1, 1, 0, 0, 1, 1)), 5)
    92
    """
    if n < 1:
        msg = f"n must be positive, got {n}"
        raise PreconditionError(msg)
    if profile.n != n:
        msg = f"profile {profile} does not have n + 1 = {n + 1} entries"
        raise PreconditionError(msg)
    offset = Fraction(5 * n - 3 * n * n, 2)
    total = sum(
        (count * (6 * i * (i - 1) + offset) for i, count in enumerate(profile.counts)),
        Fraction(0),
    )
    if total.denominator != 1:
        msg = f"c1*c{n - 1} from profile {profile} is not an integer: {total}"
        raise ArithmeticError(msg)
    return int(total)


def c1_cn_minus_1(n: int) -> ChernMonomial:
    """The monomial ``c_1 c_{n-1}``, read as ``c_1`` for ``n == 1``."""
    if n < 1:
        msg = f"n must be positive, got {n}"
        raise PreconditionError(msg)
    exponents = [0] * n
    exponents[0] += 1
    if n > 1:
        exponents[n - 2] += 1
    return ChernMonomial(exponents=tuple(exponents))


def gs_cross_check(dataset: FixedPointDataset, profile: NProfile) -> Violation | None:
    """Compare the localized ``c_1 c_{n-1}`` with its N-profile formula.

    Returns:
        ``None`` when both sides agree, otherwise the violation.
    """
    monomial = c1_cn_minus_1(dataset.n)
    localized = abbv_integrate(dataset, monomial)
    predicted = gs_chern_number(profile, dataset.n)
    if localized == predicted:
        return None
    return Violation(
        kind="c1-cn-1-mismatch",
        detail=f"localized {monomial} = {format_rational(localized)} but the "
        f"N-profile predicts {predicted}",
        witness={
            "localized": format_rational(localized),
            "predicted": str(predicted),
        },
    )


class Pairing(NamedTuple):
    """Split of four fixed points into pairs with weight sums ``a`` and ``-a``.

    ``q1``, ``q2`` have sum ``a``; ``q3``, ``q4`` have sum ``-a``.
    """

    q1: int
    q2: int
    q3: int
    q4: int
    a: int


def sum_pairings(dataset: FixedPointDataset) -> list[Pairing]:
    """Every labelling of four points whose weight sums read ``a, a, -a, -a``.

    Raises:
        PreconditionError: Unless the dataset has exactly four points.
    """
    if dataset.point_count != PAIRING_POINT_COUNT:
        msg = f"pairings need exactly 4 fixed points, got {dataset.point_count}"
        raise PreconditionError(msg)
    sums = [weight_sum(p) for p in dataset.points]
    pairings: list[Pairing] = []
    for first, second in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        for plus, minus in ((first, second), (second, first)):
            a = sums[plus[0]]
            if sums[plus[1]] == a and sums[minus[0]] == -a and sums[minus[1]] == -a:
                pairings.append(Pairing(*plus, *minus, a))
    return pairings


def product_pairing_holds(dataset: FixedPointDataset, pairing: Pairing) -> bool:
    """Whether the Euler classes of each pair are opposite."""
    products = [weight_product(p) for p in dataset.points]
    return (
        products[pairing.q1] == -products[pairing.q2]
        and products[pairing.q3] == -products[pairing.q4]
    )


def reciprocal_euler_sum(dataset: FixedPointDataset) -> Fraction:
    """``sum_p 1 / prod(w_p)``, the localized integral of ``1``."""
    return sum((Fraction(1, weight_product(p)) for p in dataset.points), Fraction(0))


def c1_square_reduction(
    dataset: FixedPointDataset, monomial: ChernMonomial
) -> tuple[Fraction, Fraction]:
    """Both sides of ``int c1^2 * m' = a^2 * int m'`` for a paired dataset.

    Returns:
        ``(int monomial, a^2 * int monomial / c1^2)``; equal whenever the
        weight sums pair up with common value ``a``.

    Raises:
        PreconditionError: If no pairing exists or ``monomial`` lacks ``c1^2``.
    """
    pairings = sum_pairings(dataset)
    if not pairings:
        msg = "weight sums admit no a, a, -a, -a pairing"
        raise PreconditionError(msg)
    if monomial.c1_power < 2:  # noqa: PLR2004
        msg = f"{monomial} has no c1^2 factor"
        raise PreconditionError(msg)
    a = pairings[0].a
    return (
        abbv_integrate(dataset, monomial),
        a * a * abbv_integrate(dataset, monomial.without_c1_square()),
    )
