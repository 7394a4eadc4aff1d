"""Certification of fixed-point data against every known necessary condition.

A certificate lists each check exactly once, in a fixed order, whether it
passed, failed or did not apply. Checks never short-circuit: a failure is
recorded and the remaining checks still run.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from collections.abc import Sequence
from fractions import Fraction
from functools import cached_property

from .algebra import format_rational
from .errors import PreconditionError
from .fixed_points import n_profile
from .fixed_points import weight_sum
from .genus import ChiVector
from .genus import check_chi_structure
from .genus import chi_samples
from .genus import chi_vector
from .genus import profile_violations
from .genus import sample_points
from .localization import PAIRING_MIN_N
from .localization import PAIRING_POINT_COUNT
from .localization import c1sq_divisibility_check
from .localization import chern_table
from .localization import gs_cross_check
from .localization import integrality_check
from .localization import product_pairing_holds
from .localization import reciprocal_euler_sum
from .localization import sum_pairings
from .localization import vanishing_check
from .logging import get_logger
from .models import Certificate
from .models import CheckResult
from .models import CheckStatus
from .models import ChernMonomial
from .models import ChernTable
from .models import FixedPoint
from .models import FixedPointDataset
from .models import MutationReport
from .models import NProfile
from .models import Violation
from .settings import get_settings

logger = get_logger(__name__)

TODD_DIMENSION_N = 5
TODD_DENOMINATOR = 1440

BASIS = {
    "validation": "every point has n nonzero integer weights and there is a point",
    "parity": "in dimensions not divisible by 4 the number of fixed points is even",
    "few-points": "one fixed point forces dimension 0, two force dimension 2 or 6, "
    "three force dimension 4",
    "chi-structure": "chi^i = (-1)^i N_i with N_i = N_{n-i} >= 0 summing to the "
    "number of fixed points",
    "consecutive": "in positive dimension some N_i and N_{i+1} are both nonzero",
    "chi-constancy": "every chi^i localization sum reduces to an integer constant",
    "vanishing": "localized integrals of degree below n vanish",
    "integrality": "Chern numbers are integers",
    "gs-cross-check": "int c1*c_{n-1} = sum_i N_i (6i(i-1) + (5n - 3n^2)/2)",
    "pairing": "four fixed points with n >= 4 split into pairs with weight sums "
    "a, a, -a, -a",
    "c1-square-vanishing": "with four fixed points and n >= 4 every Chern number "
    "divisible by c1^2 vanishes",
    "todd-identity": "in dimension 10, Todd = (-c1c4 + c1^2c3 + 3c1c2^2 - c1^3c2)/1440",
}

REFERENCES = {
    "validation": "definition of an isolated fixed point",
    "parity": "symmetry N_i = N_{n-i} of the chi_y-genus (Hirzebruch-Berger-Jung)",
    "few-points": "classification of actions with at most three fixed points "
    "(Kosniowski, Musin, Wiemeler)",
    "chi-structure": "Kosniowski formula for the chi_y-genus",
    "consecutive": "nonvanishing of consecutive chi_y coefficients",
    "chi-constancy": "Kosniowski formula for the chi_y-genus",
    "vanishing": "Atiyah-Bott-Berline-Vergne localization in degree below n",
    "integrality": "Atiyah-Bott-Berline-Vergne localization",
    "gs-cross-check": "Godinho-Sabatini formula for c1*c_{n-1}",
    "pairing": "weight-sum pairing for circle actions with four fixed points",
    "c1-square-vanishing": "Atiyah-Bott-Berline-Vergne localization with the "
    "weight-sum pairing",
    "todd-identity": "Hirzebruch Todd polynomial in complex dimension 5",
}


class CertificationContext:
    """Dataset plus lazily computed invariants shared between checks."""

    def __init__(self, dataset: FixedPointDataset) -> None:
        """Wrap ``dataset``; nothing is computed until a check asks."""
        self.dataset = dataset

    @cached_property
    def profile(self) -> NProfile:
        """N-profile of the dataset."""
        return n_profile(self.dataset)

    @cached_property
    def chi(self) -> ChiVector:
        """Symbolically reduced chi-vector."""
        return chi_vector(self.dataset)

    @cached_property
    def table(self) -> ChernTable:
        """Chern table by localization."""
        return chern_table(self.dataset)

    @cached_property
    def samples(self) -> list[Fraction]:
        """Rational points for the evaluation cross-check of chi^i."""
        settings = get_settings()
        return sample_points(settings.sample_points, settings.sample_seed)


def _result(
    check: str,
    violations: list[Violation],
    witness: dict[str, str] | None = None,
) -> CheckResult:
    return CheckResult(
        check=check,
        status=CheckStatus.FAIL if violations else CheckStatus.PASS,
        witness=witness or {},
        basis=BASIS[check],
        reference=REFERENCES[check],
        violations=tuple(violations),
    )


def _skipped(check: str, precondition: str) -> CheckResult:
    return CheckResult(
        check=check,
        status=CheckStatus.SKIPPED,
        witness={"precondition": precondition},
        basis=BASIS[check],
        reference=REFERENCES[check],
    )


def check_validation(dataset: FixedPointDataset) -> CheckResult:
    """Re-assert the dataset invariants (models built without validation included)."""
    violations: list[Violation] = []
    if not dataset.points:
        violations.append(Violation(kind="empty", detail="no fixed points"))
    for index, point in enumerate(dataset.points):
        if len(point.weights) != dataset.n:
            violations.append(
                Violation(
                    kind="ragged",
                    detail=f"point {index} has {len(point.weights)} weights",
                )
            )
        if 0 in point.weights:
            violations.append(
                Violation(kind="zero-weight", detail=f"point {index} has weight 0")
            )
    return _result(
        "validation",
        violations,
        {"n": str(dataset.n), "points": str(dataset.point_count)},
    )


def check_parity(dataset: FixedPointDataset) -> CheckResult:
    """Odd fixed-point counts need the dimension to be a multiple of 4."""
    witness = {"dimension": str(dataset.dimension), "points": str(dataset.point_count)}
    violations = []
    if dataset.dimension % 4 != 0 and dataset.point_count % 2 == 1:
        violations.append(
            Violation(
                kind="odd-count",
                detail=f"{dataset.point_count} fixed points in dimension "
                f"{dataset.dimension}",
            )
        )
    return _result("parity", violations, witness)


_FEW_POINT_DIMENSIONS = {1: {0}, 2: {2, 6}, 3: {4}}


def check_few_points(dataset: FixedPointDataset) -> CheckResult:
    """Dimension constraints for one, two or three fixed points."""
    k = dataset.point_count
    allowed = _FEW_POINT_DIMENSIONS.get(k)
    if allowed is None:
        return _skipped("few-points", "at most 3 fixed points")
    witness = {
        "points": str(k),
        "dimension": str(dataset.dimension),
        "allowed": ", ".join(str(d) for d in sorted(allowed)),
    }
    violations = []
    if dataset.dimension not in allowed:
        violations.append(
            Violation(
                kind="dimension",
                detail=f"{k} fixed points are impossible in dimension "
                f"{dataset.dimension}",
            )
        )
    return _result("few-points", violations, witness)


def check_consecutive(profile: NProfile) -> CheckResult:
    """Some two consecutive entries of the N-profile are nonzero."""
    if profile.n < 1:
        return _skipped("consecutive", "positive dimension")
    witness = {"profile": str(profile)}
    counts = profile.counts
    if any(counts[i] and counts[i + 1] for i in range(profile.n)):
        return _result("consecutive", [], witness)
    return _result(
        "consecutive",
        [
            Violation(
                kind="gap",
                detail=f"no two consecutive N_i are nonzero in {profile}",
            )
        ],
        witness,
    )


def check_chi_constancy(
    chi: ChiVector,
    dataset: FixedPointDataset | None = None,
    xs: Sequence[Fraction] = (),
) -> CheckResult:
    """Every chi^i must reduce to an integer.

    With ``dataset`` and sample points ``xs``, each integer value is also
    compared against the unreduced sum evaluated at every sample.
    """
    witness = {
        f"chi^{c.index}": str(c.value) if c.constant else "non-constant"
        for c in chi.numbers
    }
    violations = [
        Violation(
            kind="non-constant",
            detail=f"chi^{c.index} reduces to {c.function}",
            witness={"reduced": str(c.function)},
        )
        for c in chi.numbers
        if not c.constant
    ]
    if dataset is not None and xs:
        witness["samples"] = ", ".join(format_rational(x) for x in xs)
        for c in chi.numbers:
            if not c.constant:
                continue
            values = chi_samples(dataset, c.index, xs)
            if any(v != c.value for v in values):
                violations.append(
                    Violation(
                        kind="sample-mismatch",
                        detail=f"chi^{c.index} = {c.value} but sampled values are "
                        + ", ".join(format_rational(v) for v in values),
                    )
                )
    return _result("chi-constancy", violations, witness)


def check_pairing(dataset: FixedPointDataset) -> CheckResult:
    """Pairing of weight sums for four fixed points with ``n >= 4``.

    Fails when the sums admit no ``a, a, -a, -a`` labelling, or when neither
    branch of the stronger dichotomy holds: all sums zero with
    ``sum 1/prod(w) == 0``, or a sum pairing whose Euler classes are opposite
    within each pair. Every branch that holds is reported.
    """
    if dataset.point_count != PAIRING_POINT_COUNT or dataset.n < PAIRING_MIN_N:
        return _skipped("pairing", "exactly 4 fixed points and n >= 4")
    sums = [weight_sum(p) for p in dataset.points]
    pairings = sum_pairings(dataset)
    zero_branch = all(s == 0 for s in sums) and reciprocal_euler_sum(dataset) == 0
    product_branch = [p for p in pairings if product_pairing_holds(dataset, p)]

    branches = []
    if zero_branch:
        branches.append("zero-sums")
    if product_branch:
        branches.append("opposite-products")
    witness = {
        "sums": ", ".join(str(s) for s in sums),
        "pairing": (
            f"({pairings[0].q1},{pairings[0].q2})({pairings[0].q3},{pairings[0].q4}) "
            f"a={pairings[0].a}"
            if pairings
            else "none"
        ),
        "branches": ", ".join(branches) or "none",
    }
    violations = []
    if not pairings:
        violations.append(
            Violation(kind="no-pairing", detail=f"weight sums {sums} do not pair up")
        )
    if not branches:
        violations.append(
            Violation(
                kind="no-branch",
                detail="neither the zero-sum nor the opposite-product branch holds",
                witness={
                    "reciprocal_euler_sum": format_rational(
                        reciprocal_euler_sum(dataset)
                    ),
                },
            )
        )
    return _result("pairing", violations, witness)


def _todd_rhs(table: ChernTable) -> Fraction:
    def value(**powers: int) -> Fraction:
        return table.value(ChernMonomial.of(TODD_DIMENSION_N, **powers))

    return (
        -value(c1=1, c4=1)
        + value(c1=2, c3=1)
        + 3 * value(c1=1, c2=2)
        - value(c1=3, c2=1)
    ) / TODD_DENOMINATOR


def check_todd_identity(
    dataset: FixedPointDataset,
    chi: ChiVector | None = None,
    table: ChernTable | None = None,
) -> CheckResult:
    """Todd genus from the chi-y genus against its Chern-number expression."""
    if dataset.n != TODD_DIMENSION_N:
        return _skipped("todd-identity", "dimension 10")
    chi = chi if chi is not None else chi_vector(dataset)
    todd = chi.numbers[0].value
    if todd is None:
        return _skipped("todd-identity", "chi^0 reduces to an integer")
    table = table if table is not None else chern_table(dataset)
    rhs = _todd_rhs(table)
    witness = {"todd": str(todd), "chern_expression": format_rational(rhs)}
    violations = []
    if rhs != todd:
        violations.append(
            Violation(
                kind="todd-mismatch",
                detail=(
                    f"Todd = {todd} but the Chern numbers give {format_rational(rhs)}"
                ),
            )
        )
    return _result("todd-identity", violations, witness)


def _chi_structure(ctx: CertificationContext) -> CheckResult:
    return _result(
        "chi-structure",
        check_chi_structure(ctx.dataset, ctx.chi),
        {"profile": str(ctx.profile)},
    )


def _profile_structure(ctx: CertificationContext) -> CheckResult:
    return _result(
        "chi-structure",
        profile_violations(ctx.profile, ctx.dataset.point_count),
        {"profile": str(ctx.profile)},
    )


def _gs_cross_check(ctx: CertificationContext) -> CheckResult:
    violation = gs_cross_check(ctx.dataset, ctx.profile)
    return _result("gs-cross-check", [violation] if violation else [])


def _c1_square(ctx: CertificationContext) -> CheckResult:
    try:
        violations = c1sq_divisibility_check(ctx.dataset)
    except PreconditionError:
        return _skipped("c1-square-vanishing", "exactly 4 fixed points and n >= 4")
    return _result("c1-square-vanishing", violations)


Check = tuple[str, Callable[[CertificationContext], CheckResult]]

CHECKS: tuple[Check, ...] = (
    ("validation", lambda ctx: check_validation(ctx.dataset)),
    ("parity", lambda ctx: check_parity(ctx.dataset)),
    ("few-points", lambda ctx: check_few_points(ctx.dataset)),
    ("chi-structure", _chi_structure),
    ("consecutive", lambda ctx: check_consecutive(ctx.profile)),
    (
        "chi-constancy",
        lambda ctx: check_chi_constancy(ctx.chi, ctx.dataset, ctx.samples),
    ),
    ("vanishing", lambda ctx: _result("vanishing", vanishing_check(ctx.dataset))),
    ("integrality", lambda ctx: _result("integrality", integrality_check(ctx.table))),
    ("gs-cross-check", _gs_cross_check),
    ("pairing", lambda ctx: check_pairing(ctx.dataset)),
    ("c1-square-vanishing", _c1_square),
    ("todd-identity", lambda ctx: check_todd_identity(ctx.dataset, ctx.chi, ctx.table)),
)

# Checks that avoid symbolic reduction, cheapest first. The chi-structure
# stage only looks at the N-profile; a failure there implies the full
# chi-structure check fails too.
STAGED_CHECKS: tuple[Check, ...] = (
    ("parity", lambda ctx: check_parity(ctx.dataset)),
    ("few-points", lambda ctx: check_few_points(ctx.dataset)),
    ("chi-structure", _profile_structure),
    ("consecutive", lambda ctx: check_consecutive(ctx.profile)),
    ("pairing", lambda ctx: check_pairing(ctx.dataset)),
    ("vanishing", lambda ctx: _result("vanishing", vanishing_check(ctx.dataset))),
    ("gs-cross-check", _gs_cross_check),
    ("integrality", lambda ctx: _result("integrality", integrality_check(ctx.table))),
    ("c1-square-vanishing", _c1_square),
)


def certify(dataset: FixedPointDataset) -> Certificate:
    """Run every check in order and assemble the certificate."""
    logger.info("Certifying %s", dataset.display_name)
    ctx = CertificationContext(dataset)
    results = tuple(run(ctx) for _, run in CHECKS)
    for result in results:
        logger.debug("%s: %s %s", result.check, result.status, result.witness)
    verdict = "fail" if any(r.failed for r in results) else "pass"
    logger.info("Verdict for %s: %s", dataset.display_name, verdict)
    return Certificate(
        label=dataset.display_name,
        dimension=dataset.dimension,
        point_count=dataset.point_count,
        checks=results,
        warnings=dataset.warnings,
        verdict=verdict,
    )


def first_staged_failure(ctx: CertificationContext) -> str | None:
    """Name of the first failing cheap check, or ``None`` if all pass."""
    for name, run in STAGED_CHECKS:
        if run(ctx).failed:
            return name
    return None


def _mutate(
    dataset: FixedPointDataset, rng: random.Random, spread: int
) -> FixedPointDataset:
    p = rng.randrange(dataset.point_count)
    point = dataset.points[p]
    i = rng.randrange(dataset.n)
    taken = {0, *point.weights}
    choices = [w for w in range(-spread, spread + 1) if w not in taken]
    weights = list(point.weights)
    weights[i] = rng.choice(choices)
    points = list(dataset.points)
    points[p] = FixedPoint(weights=tuple(weights), id=point.id)
    return dataset.model_copy(update={"points": tuple(points)})


def mutation_drill(
    dataset: FixedPointDataset, trials: int, seed: int, spread: int = 9
) -> MutationReport:
    """Certify ``trials`` single-weight mutations of ``dataset``.

    Each trial replaces one weight with a different nonzero value in
    ``[-spread, spread]``. Mutants that still pass are legitimate but should be
    rare; they are logged and returned for review.
    """
    rng = random.Random(seed)  # noqa: S311
    rejected = 0
    passing: list[tuple[tuple[int, ...], ...]] = []
    for _ in range(trials):
        mutant = _mutate(dataset, rng, spread)
        if certify(mutant).passed:
            logger.warning(
                "Mutant of %s passed: %s",
                dataset.display_name,
                mutant.weight_vectors(),
            )
            passing.append(tuple(mutant.weight_vectors()))
        else:
            rejected += 1
    return MutationReport(
        label=dataset.display_name,
        trials=trials,
        rejected=rejected,
        passing_mutants=tuple(passing),
    )
