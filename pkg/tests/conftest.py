"""Shared fixtures."""

from collections.abc import Callable
from collections.abc import Iterator
from pathlib import Path

import pytest

from fixpoint_bounds.fixed_points import dump_dataset
from fixpoint_bounds.fixtures import builtin_fixture
from fixpoint_bounds.fixtures import complex_projective_space
from fixpoint_bounds.models import FixedPointDataset
from fixpoint_bounds.settings import get_settings

WriteDataset = Callable[..., Path]


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep FIXPOINT_* variables from the environment out of the tests."""
    monkeypatch.delenv("FIXPOINT_LOG_LEVEL", raising=False)
    monkeypatch.delenv("FIXPOINT_SEARCH_WORKERS", raising=False)
    monkeypatch.delenv("FIXPOINT_SEARCH_BOUND", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def cp2() -> FixedPointDataset:
    """Linear action on CP^2."""
    return complex_projective_space(2)


@pytest.fixture
def cp5() -> FixedPointDataset:
    """Linear action on CP^5."""
    return complex_projective_space(5)


@pytest.fixture
def s6() -> FixedPointDataset:
    """G2 circle on S^6."""
    return builtin_fixture("s6")


@pytest.fixture
def s2xs6() -> FixedPointDataset:
    """Four fixed points in dimension 8."""
    return builtin_fixture("s2xs6")


@pytest.fixture
def cp2xs6() -> FixedPointDataset:
    """Six fixed points in dimension 10 with Todd genus 0."""
    return builtin_fixture("cp2xs6")


@pytest.fixture
def write_dataset(tmp_path: Path) -> WriteDataset:
    """Write a dataset (or raw text) to a temporary file and return its path."""

    def _write(dataset: FixedPointDataset | str, name: str = "data.json") -> Path:
        path = tmp_path / name
        text = dataset if isinstance(dataset, str) else dump_dataset(dataset)
        path.write_text(text, encoding="utf-8")
        return path

    return _write
