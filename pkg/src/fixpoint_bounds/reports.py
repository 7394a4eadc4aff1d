"""Plain-text rendering of reports.

Text output is deterministic for a fixed input: no timestamps, no colour, no
decimals. Every field of the underlying model is shown so the JSON form
(``model_dump_json``) and the text form carry the same information.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .algebra import format_rational
from .models import Certificate
from .models import ChernReport
from .models import GenusReport
from .models import MutationReport
from .models import ProofReport
from .models import SearchReport

if TYPE_CHECKING:
    from pydantic import BaseModel

Report = (
    Certificate
    | GenusReport
    | ChernReport
    | ProofReport
    | SearchReport
    | MutationReport
)


def _int_or_dash(value: int | None) -> str:
    return "-" if value is None else str(value)


def _vector(values: tuple[int | None, ...]) -> str:
    return "(" + ", ".join(_int_or_dash(v) for v in values) + ")"


def _warnings(warnings: tuple[str, ...]) -> list[str]:
    return [f"warning: {w}" for w in warnings]


def _witness(witness: dict[str, str]) -> str:
    return ", ".join(f"{key}={value}" for key, value in witness.items())


def render_certificate(certificate: Certificate) -> str:
    """Certificate as one line per check, then the verdict."""
    lines = [
        f"certificate: {certificate.label}",
        f"dimension: {certificate.dimension}",
        f"fixed points: {certificate.point_count}",
        *_warnings(certificate.warnings),
    ]
    width = max(len(c.check) for c in certificate.checks)
    for result in certificate.checks:
        line = f"  {result.check:<{width}}  {result.status.value:<7}"
        if result.witness:
            line += f"  {_witness(result.witness)}"
        lines.append(line.rstrip())
        lines.append(f"  {'':<{width}}  basis: {result.basis}")
        lines.append(f"  {'':<{width}}  ref: {result.reference}")
        lines.extend(
            f"  {'':<{width}}  ! {v.kind}: {v.detail}" for v in result.violations
        )
    lines.append(f"verdict: {certificate.verdict}")
    return "\n".join(lines)


def render_genus(report: GenusReport) -> str:
    """Chi-vector next to the N-profile."""
    lines = [
        f"genus: {report.label}",
        f"n: {report.n}",
        *_warnings(report.warnings),
        f"chi: {_vector(report.chi)}",
        f"N:   {_vector(report.profile)}",
        f"todd: {_int_or_dash(report.todd)}",
        f"euler: {_int_or_dash(report.euler)}",
        f"signature: {_int_or_dash(report.signature)}",
    ]
    lines.extend(
        f"non-constant chi^{index}: {function}"
        for index, function in report.non_constant.items()
    )
    lines.append(f"verdict: {'pass' if report.constant else 'fail'}")
    return "\n".join(lines)


def render_chern(report: ChernReport) -> str:
    """Chern table in monomial order."""
    lines = [
        f"chern: {report.label}",
        f"n: {report.table.n}",
        *_warnings(report.warnings),
    ]
    width = max(len(str(e.monomial)) for e in report.table.entries)
    lines.extend(
        f"  {e.monomial!s:<{width}}  {format_rational(e.value)}"
        for e in report.table.entries
    )
    lines.append(f"verdict: {'pass' if report.integral else 'fail'}")
    return "\n".join(lines)


def render_proof(report: ProofReport) -> str:
    """Case table, chain of reasons and the minimum table."""
    lines = [
        f"circle actions on {report.dimension}-dimensional almost complex "
        f"manifolds with {report.point_count} fixed points",
        "cases:",
    ]
    for case in report.cases:
        profile = "(" + ", ".join(str(c) for c in case.profile) + ")"
        lines.append(
            f"  N = {profile}  todd = {case.todd}  c1c4 = {case.c1c4}  "
            f"c1c2^2 = {format_rational(case.c1c2sq)}  {case.verdict}"
        )
    lines.append("chain:")
    lines.extend(f"  - {step}" for step in report.chain)
    lines.append(f"minimum fixed points: {report.minimum_fixed_points}")
    lines.append("known minima by dimension:")
    lines.extend(
        f"  {dim}: {count}" for dim, count in sorted(report.known_minima.items())
    )
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines)


def render_search(report: SearchReport) -> str:
    """Candidate counts and failure statistics."""
    lines = [
        f"search: {report.point_count} fixed points, n = {report.n}, "
        f"|w| <= {report.bound}",
        f"candidates: {report.candidates}",
        f"expected candidates: {report.expected_candidates}",
        f"passing: {report.passing}",
        "failures by first failing check:",
    ]
    lines.extend(f"  {check}: {count}" for check, count in report.failures.items())
    lines.extend(f"  passing dataset: {list(d)}" for d in report.passing_datasets)
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines)


def render_mutation(report: MutationReport) -> str:
    """Rejection rate of the mutation drill."""
    lines = [
        f"mutation drill: {report.label}",
        f"trials: {report.trials}",
        f"rejected: {report.rejected}",
    ]
    lines.extend(f"  passing mutant: {list(m)}" for m in report.passing_mutants)
    lines.append(f"rejection rate: {format_rational(report.rejection_rate)}")
    lines.append(f"target: {format_rational(report.target)}")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines)


_RENDERERS = {
    Certificate: render_certificate,
    GenusReport: render_genus,
    ChernReport: render_chern,
    ProofReport: render_proof,
    SearchReport: render_search,
    MutationReport: render_mutation,
}


def render_text(report: Report) -> str:
    """Dispatch to the text renderer for ``report``'s type."""
    return _RENDERERS[type(report)](report)  # type: ignore[operator]


def render_json(report: BaseModel) -> str:
    """Structured form; exact rationals appear as numerator/denominator pairs."""
    return report.model_dump_json(indent=2, by_alias=True)


def verdict_line(report: Report) -> str:
    """The single line ``--quiet`` prints."""
    return render_text(report).rsplit("\n", 1)[-1]
