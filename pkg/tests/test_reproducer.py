"""Tests for the dimension-10 reproduction and the weight search."""

from fractions import Fraction

import pytest

from fixpoint_bounds.errors import PreconditionError
from fixpoint_bounds.fixtures import complex_projective_space
from fixpoint_bounds.models import FixedPointDataset
from fixpoint_bounds.models import NProfile
from fixpoint_bounds.reproducer import KNOWN_MINIMA
from fixpoint_bounds.reproducer import brute_force_profiles
from fixpoint_bounds.reproducer import canonicalize
from fixpoint_bounds.reproducer import case_contradiction
from fixpoint_bounds.reproducer import count_canonical_candidates
from fixpoint_bounds.reproducer import enumerate_cases
from fixpoint_bounds.reproducer import enumerate_profiles
from fixpoint_bounds.reproducer import reproduce_theorem
from fixpoint_bounds.reproducer import search_weights

CASES = {
    (1, 1, 0, 0, 1, 1): (1, 92, Fraction(1532, 3)),
    (1, 0, 1, 1, 0, 1): (1, 68, Fraction(1508, 3)),
    (0, 1, 1, 1, 1, 0): (0, 20, Fraction(20, 3)),
    (0, 0, 2, 2, 0, 0): (0, -4, Fraction(-4, 3)),
}


class TestProfiles:
    """Test enumeration of admissible N-profiles."""

    def test_dimension_ten_cases(self) -> None:
        """Palindromic, summing to 4, with two consecutive nonzero entries."""
        assert [p.counts for p in enumerate_cases()] == list(CASES)

    def test_classic_cases_present(self) -> None:
        """The three textbook cases are among them."""
        found = {p.counts for p in enumerate_cases()}
        assert {(1, 1, 0, 0, 1, 1), (0, 1, 1, 1, 1, 0), (0, 0, 2, 2, 0, 0)} <= found

    @pytest.mark.parametrize(
        ("n", "k"), [(5, 4), (5, 6), (4, 4), (3, 2), (6, 4), (1, 2)]
    )
    def test_brute_force_oracle(self, n: int, k: int) -> None:
        """Recursive enumeration agrees with a scan of every vector."""
        assert enumerate_profiles(n, k) == brute_force_profiles(n, k)

    def test_two_points_in_dimension_six(self) -> None:
        """S^6 has profile (0, 1, 1, 0); (1, 0, 0, 1) has a gap."""
        assert [p.counts for p in enumerate_profiles(3, 2)] == [(0, 1, 1, 0)]

    def test_precondition(self) -> None:
        """Point count must be positive."""
        with pytest.raises(PreconditionError):
            enumerate_profiles(5, 0)


class TestCases:
    """Test refutation of each profile."""

    @pytest.mark.parametrize("counts", list(CASES))
    def test_case_values(self, counts: tuple[int, ...]) -> None:
        """Todd, c1*c4 and the forced c1*c2^2."""
        report = case_contradiction(NProfile(counts=counts))
        assert (report.todd, report.c1c4, report.c1c2sq) == CASES[counts]
        assert report.verdict == "contradiction"

    @pytest.mark.parametrize("counts", list(CASES))
    def test_divisibility(self, counts: tuple[int, ...]) -> None:
        """1440 * Todd + c1*c4 is never divisible by 3."""
        todd, c1c4, _ = CASES[counts]
        assert (1440 * todd + c1c4) % 3 != 0

    def test_wrong_dimension(self) -> None:
        """Only dimension-10 profiles are accepted."""
        with pytest.raises(PreconditionError):
            case_contradiction(NProfile(counts=(1, 1, 1)))


class TestReproduceTheorem:
    """Test the assembled proof report."""

    def test_report(self) -> None:
        """All cases refuted, minimum 6."""
        report = reproduce_theorem()
        assert report.verdict == "pass"
        assert report.minimum_fixed_points == 6
        assert len(report.cases) == len(CASES)
        assert all(c.verdict == "contradiction" for c in report.cases)
        assert report.known_minima == KNOWN_MINIMA
        assert report.known_minima[10] == 6

    def test_deterministic(self) -> None:
        """Two runs are identical."""
        assert reproduce_theorem() == reproduce_theorem()

    def test_rationals_serialized_exactly(self) -> None:
        """Witness rationals appear as numerator/denominator pairs."""
        payload = reproduce_theorem().model_dump(mode="json")
        assert payload["cases"][0]["c1c2sq"] == {"numerator": 1532, "denominator": 3}


class TestCanonicalize:
    """Test the canonical form used by the search."""

    def test_gcd_and_sorting(self) -> None:
        """Divide by the common gcd, then sort."""
        d = FixedPointDataset.from_weights(2, [[2, -4], [-2, 4]])
        assert canonicalize(d).weight_vectors() == [(-2, 1), (-1, 2)]

    def test_idempotent(self) -> None:
        """Canonical data is left alone."""
        d = canonicalize(complex_projective_space(3))
        assert canonicalize(d) == d

    def test_permutation_invariant(self, cp2: FixedPointDataset) -> None:
        """Permuted CP^2 input has the same canonical form."""
        permuted = FixedPointDataset.from_weights(
            2, [tuple(reversed(w)) for w in reversed(cp2.weight_vectors())], label="CP2"
        )
        assert canonicalize(permuted) == canonicalize(cp2)
        assert canonicalize(cp2).weight_vectors() == [(-2, -1), (-1, 1), (1, 2)]


class TestSearch:
    """Test the bounded exhaustive search."""

    def test_closed_form_counts(self) -> None:
        """Moebius inversion over the common divisor."""
        assert count_canonical_candidates(1) == 126
        assert count_canonical_candidates(2) == 455000

    def test_bound_one(self) -> None:
        """No dataset with weights +-1 passes."""
        report = search_weights(1)
        assert report.candidates == report.expected_candidates == 126
        assert report.passing == 0
        assert report.passing_datasets == ()
        assert sum(report.failures.values()) == 126
        assert report.verdict == "pass"

    def test_workers_do_not_change_the_report(self) -> None:
        """Sharding across processes merges deterministically."""
        assert search_weights(1, workers=2) == search_weights(1)

    def test_other_dimensions(self) -> None:
        """n and the point count are knobs."""
        report = search_weights(1, n=2, points=2)
        assert report.candidates == report.expected_candidates
        assert report.passing == 0

    def test_dimension_six_two_points_finds_s6(self) -> None:
        """The search does find genuine data when it exists."""
        report = search_weights(3, n=3, points=2)
        assert ((-3, 1, 2), (-2, -1, 3)) in report.passing_datasets
        assert report.verdict == "fail"

    def test_bound_must_be_positive(self) -> None:
        """Bound 0 is a precondition error."""
        with pytest.raises(PreconditionError, match="must be >= 1"):
            search_weights(0)

    @pytest.mark.slow
    def test_bound_two(self) -> None:
        """455000 canonical candidates, none passing."""
        report = search_weights(2)
        assert report.candidates == report.expected_candidates == 455000
        assert report.passing == 0
