"""Data models for fixed-point datasets, Chern tables and reports."""

from __future__ import annotations

from enum import StrEnum
from fractions import Fraction
from typing import Annotated
from typing import Any
from typing import Literal

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import NonNegativeInt
from pydantic import PlainSerializer
from pydantic import PlainValidator
from pydantic import StrictInt
from pydantic import computed_field
from pydantic import field_validator
from pydantic import model_validator

from .algebra import format_rational


def _parse_rational(value: Any) -> Fraction:  # noqa: ANN401
    if isinstance(value, bool):
        msg = "booleans are not rational numbers"
        raise TypeError(msg)
    if isinstance(value, Fraction | int | str):
        return Fraction(value)
    if isinstance(value, dict) and set(value) == {"numerator", "denominator"}:
        return Fraction(int(value["numerator"]), int(value["denominator"]))
    msg = f"cannot read an exact rational from {value!r}"
    raise ValueError(msg)


def _dump_rational(value: Fraction) -> dict[str, int]:
    return {"numerator": value.numerator, "denominator": value.denominator}


ExactRational = Annotated[
    Fraction,
    PlainValidator(_parse_rational),
    PlainSerializer(_dump_rational, return_type=dict),
]


class FixedPoint(BaseModel):
    """Isolated fixed point with its tangent weights."""

    model_config = ConfigDict(frozen=True)

    weights: tuple[StrictInt, ...] = Field(
        ..., min_length=1, description="Nonzero integer weights"
    )
    id: str | None = Field(None, description="Optional point identifier")

    @model_validator(mode="before")
    @classmethod
    def _accept_bare_weights(cls, data: Any) -> Any:  # noqa: ANN401
        if isinstance(data, list | tuple):
            return {"weights": tuple(data)}
        return data

    @field_validator("weights")
    @classmethod
    def _weights_nonzero(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(w == 0 for w in v):
            msg = f"weight 0 is not allowed at an isolated fixed point: {list(v)}"
            raise ValueError(msg)
        return v

    @property
    def n(self) -> int:
        """Number of weights (complex dimension)."""
        return len(self.weights)


class FixedPointDataset(BaseModel):
    """Weights of every fixed point of a circle action on a 2n-manifold."""

    model_config = ConfigDict(frozen=True)

    n: StrictInt = Field(..., gt=0, description="Half the real dimension")
    points: tuple[FixedPoint, ...] = Field(..., min_length=1)
    label: str | None = Field(None, description="Human-readable name")
    warnings: tuple[str, ...] = Field(
        (), exclude=True, description="Ingest warnings, e.g. unknown fields"
    )

    @model_validator(mode="after")
    def _points_have_n_weights(self) -> FixedPointDataset:
        for index, point in enumerate(self.points):
            if point.n != self.n:
                msg = (
                    f"point {index} has {point.n} weights but n = {self.n}: "
                    f"{list(point.weights)}"
                )
                raise ValueError(msg)
        return self

    @classmethod
    def from_weights(
        cls,
        n: int,
        weights: list[list[int]] | list[tuple[int, ...]],
        label: str | None = None,
    ) -> FixedPointDataset:
        """Build a dataset straight from weight vectors."""
        return cls(
            n=n,
            points=tuple(FixedPoint(weights=tuple(w)) for w in weights),
            label=label,
        )

    @property
    def dimension(self) -> int:
        """Real dimension ``2n``."""
        return 2 * self.n

    @property
    def point_count(self) -> int:
        """Number of fixed points."""
        return len(self.points)

    def weight_vectors(self) -> list[tuple[int, ...]]:
        """Weights of every point, in input order."""
        return [p.weights for p in self.points]

    @property
    def display_name(self) -> str:
        """Label or a generated description."""
        return self.label or f"{self.point_count} points in dimension {self.dimension}"


class NProfile(BaseModel):
    """Counts ``(N_0, ..., N_n)`` of fixed points by number of negative weights."""

    model_config = ConfigDict(frozen=True)

    counts: tuple[NonNegativeInt, ...] = Field(..., min_length=1)

    @property
    def n(self) -> int:
        """Half dimension the profile belongs to."""
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        """Total number of fixed points."""
        return sum(self.counts)

    @property
    def is_palindromic(self) -> bool:
        """Whether ``N_i == N_{n-i}`` for every ``i``."""
        return self.counts == self.counts[::-1]

    def __getitem__(self, index: int) -> int:
        return self.counts[index]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.counts) + ")"


class ChernMonomial(BaseModel):
    """Exponent vector ``(j_1, ..., j_n)`` of ``c_1^{j_1} ... c_n^{j_n}``."""

    model_config = ConfigDict(frozen=True)

    exponents: tuple[NonNegativeInt, ...]

    @classmethod
    def of(cls, n: int, **powers: int) -> ChernMonomial:
        """Build from keyword powers, e.g. ``ChernMonomial.of(5, c1=1, c2=2)``."""
        exponents = [0] * n
        for name, power in powers.items():
            k = int(name.removeprefix("c"))
            if not 1 <= k <= n:
                msg = f"{name} is not a Chern class of a {2 * n}-manifold"
                raise ValueError(msg)
            exponents[k - 1] = power
        return cls(exponents=tuple(exponents))

    @property
    def n(self) -> int:
        """Number of Chern classes the vector ranges over."""
        return len(self.exponents)

    @property
    def degree(self) -> int:
        """Cohomological degree in units of the degree-2 generator."""
        return sum(k * j for k, j in enumerate(self.exponents, start=1))

    @property
    def c1_power(self) -> int:
        """Exponent of ``c_1``."""
        return self.exponents[0] if self.exponents else 0

    def without_c1_square(self) -> ChernMonomial:
        """Divide by ``c_1^2``."""
        if self.c1_power < 2:  # noqa: PLR2004
            msg = f"{self} has no c1^2 factor"
            raise ValueError(msg)
        return ChernMonomial(exponents=(self.c1_power - 2, *self.exponents[1:]))

    def __str__(self) -> str:
        factors = [
            f"c{k}" if j == 1 else f"c{k}^{j}"
            for k, j in enumerate(self.exponents, start=1)
            if j
        ]
        return "*".join(factors) or "1"


class ChernEntry(BaseModel):
    """One localized characteristic number."""

    model_config = ConfigDict(frozen=True)

    monomial: ChernMonomial
    value: ExactRational


class ChernTable(BaseModel):
    """Localized values of every degree-n Chern monomial."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    entries: tuple[ChernEntry, ...] = ()

    def value(self, monomial: ChernMonomial) -> Fraction:
        """Value recorded for ``monomial``."""
        for entry in self.entries:
            if entry.monomial == monomial:
                return entry.value
        msg = f"{monomial} is not in the table"
        raise KeyError(msg)

    def as_dict(self) -> dict[ChernMonomial, Fraction]:
        """Monomial -> value mapping, table order preserved."""
        return {entry.monomial: entry.value for entry in self.entries}


class Violation(BaseModel):
    """A single broken constraint with exact witness values."""

    model_config = ConfigDict(frozen=True)

    kind: str
    detail: str
    witness: dict[str, str] = Field(default_factory=dict)


class CheckStatus(StrEnum):
    """Outcome of one certifier check."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    """Outcome of one necessary condition."""

    model_config = ConfigDict(frozen=True)

    check: str
    status: CheckStatus
    witness: dict[str, str] = Field(default_factory=dict)
    basis: str = Field(..., description="The fact about circle actions enforced")
    reference: str = Field(
        ...,
        serialization_alias="paper_ref",
        description="Published result the check relies on",
    )
    violations: tuple[Violation, ...] = ()

    @property
    def failed(self) -> bool:
        """Whether this check failed."""
        return self.status is CheckStatus.FAIL


Verdict = Literal["pass", "fail"]

# Share of single-weight mutants the drill must reject.
DRILL_REJECTION_TARGET = Fraction(95, 100)


class Certificate(BaseModel):
    """Every check run on one dataset, in fixed order."""

    model_config = ConfigDict(frozen=True)

    label: str
    dimension: int
    point_count: int
    checks: tuple[CheckResult, ...]
    warnings: tuple[str, ...] = ()
    verdict: Verdict

    @model_validator(mode="after")
    def _verdict_matches_checks(self) -> Certificate:
        expected = "fail" if any(c.failed for c in self.checks) else "pass"
        if self.verdict != expected:
            msg = f"verdict {self.verdict!r} contradicts the check results"
            raise ValueError(msg)
        names = [c.check for c in self.checks]
        if len(names) != len(set(names)):
            msg = "a certificate lists every check exactly once"
            raise ValueError(msg)
        return self

    @property
    def passed(self) -> bool:
        """Whether no check failed."""
        return self.verdict == "pass"

    def result(self, check: str) -> CheckResult:
        """Look up a check by name."""
        for result in self.checks:
            if result.check == check:
                return result
        raise KeyError(check)


class GenusReport(BaseModel):
    """Chi-y coefficients of a dataset next to its N-profile."""

    model_config = ConfigDict(frozen=True)

    label: str
    n: int
    chi: tuple[int | None, ...]
    profile: tuple[int, ...]
    todd: int | None
    euler: int | None
    signature: int | None
    non_constant: dict[str, str] = Field(
        default_factory=dict, description="Index -> reduced function, if any"
    )
    warnings: tuple[str, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def constant(self) -> bool:
        """Whether every coefficient reduced to an integer."""
        return all(value is not None for value in self.chi)


class ChernReport(BaseModel):
    """Chern table of a dataset."""

    model_config = ConfigDict(frozen=True)

    label: str
    table: ChernTable
    warnings: tuple[str, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def integral(self) -> bool:
        """Whether every entry is an integer."""
        return all(e.value.denominator == 1 for e in self.table.entries)


class CaseReport(BaseModel):
    """Refutation of one admissible N-profile in dimension 10."""

    model_config = ConfigDict(frozen=True)

    profile: tuple[int, ...]
    todd: int
    c1c4: int
    c1c2sq: ExactRational
    verdict: Literal["contradiction", "consistent"]

    @model_validator(mode="after")
    def _verdict_tracks_integrality(self) -> CaseReport:
        expected = "consistent" if self.c1c2sq.denominator == 1 else "contradiction"
        if self.verdict != expected:
            msg = f"c1c2^2 = {format_rational(self.c1c2sq)} implies {expected}"
            raise ValueError(msg)
        return self


class ProofReport(BaseModel):
    """Mechanical reproduction of the 4-fixed-point non-existence argument."""

    model_config = ConfigDict(frozen=True)

    dimension: int = 10
    point_count: int = 4
    cases: tuple[CaseReport, ...]
    chain: tuple[str, ...]
    minimum_fixed_points: int
    known_minima: dict[int, int]
    verdict: Verdict


class SearchReport(BaseModel):
    """Outcome of the bounded exhaustive weight search."""

    model_config = ConfigDict(frozen=True)

    bound: int
    n: int
    point_count: int
    candidates: int
    expected_candidates: int
    passing: int
    passing_datasets: tuple[tuple[tuple[int, ...], ...], ...] = ()
    failures: dict[str, int] = Field(default_factory=dict)
    verdict: Verdict


class MutationReport(BaseModel):
    """Single-weight mutation drill against the certifier."""

    model_config = ConfigDict(frozen=True)

    label: str
    trials: int
    rejected: int
    passing_mutants: tuple[tuple[tuple[int, ...], ...], ...] = ()
    target: ExactRational = Field(
        DRILL_REJECTION_TARGET, description="Share of mutants that must be rejected"
    )

    @property
    def rejection_rate(self) -> Fraction:
        """Fraction of mutants the certifier rejected."""
        return Fraction(self.rejected, self.trials) if self.trials else Fraction(1)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Verdict:
        """``pass`` when the rejection rate reaches the target."""
        return "pass" if self.rejection_rate >= self.target else "fail"
