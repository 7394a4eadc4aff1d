"""Built-in fixed-point data of standard circle actions.

Weights follow the usual constructions: the linear action on CP^n with
weights ``a_j - a_k``, the G2 action on S^6, rotation on S^2 and diagonal
actions on products. None of these are accepted blindly; the test suite runs
each through the certifier.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import TYPE_CHECKING

from .fixed_points import dump_dataset
from .logging import get_logger
from .models import FixedPoint
from .models import FixedPointDataset

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

logger = get_logger(__name__)


def complex_projective_space(n: int) -> FixedPointDataset:
    """Linear action on CP^n with ``a = (0, 1, ..., n)``.

    Point ``k`` carries the weights ``j - k`` for ``j != k`` and so has
    exactly ``k`` negative weights.
    """
    return FixedPointDataset(
        n=n,
        points=tuple(
            FixedPoint(weights=tuple(j - k for j in range(n + 1) if j != k), id=f"e{k}")
            for k in range(n + 1)
        ),
        label=f"CP{n}",
    )


def sphere_2(weight: int = 1) -> FixedPointDataset:
    """Rotation of S^2 with speed ``weight``."""
    return FixedPointDataset(
        n=1,
        points=(
            FixedPoint(weights=(weight,), id="north"),
            FixedPoint(weights=(-weight,), id="south"),
        ),
        label="S2",
    )


def sphere_6(a: int = 1, b: int = 2) -> FixedPointDataset:
    """Circle inside G2 on S^6: weights ``(a, b, -a-b)`` and their negatives."""
    return FixedPointDataset(
        n=3,
        points=(
            FixedPoint(weights=(a, b, -a - b), id="north"),
            FixedPoint(weights=(-a, -b, a + b), id="south"),
        ),
        label="S6",
    )


def product(first: FixedPointDataset, second: FixedPointDataset) -> FixedPointDataset:
    """Diagonal action on a product: fixed points pair up, weights concatenate."""
    points = tuple(
        FixedPoint(
            weights=p.weights + q.weights,
            id=f"{p.id}/{q.id}" if p.id and q.id else None,
        )
        for p, q in cartesian(first.points, second.points)
    )
    return FixedPointDataset(
        n=first.n + second.n,
        points=points,
        label=f"{first.display_name}x{second.display_name}",
    )


BUILTIN_FIXTURES: dict[str, Callable[[], FixedPointDataset]] = {
    "s2": sphere_2,
    "cp2": lambda: complex_projective_space(2),
    "s2xs2": lambda: product(sphere_2(1), sphere_2(2)),
    "s6": sphere_6,
    "cp3": lambda: complex_projective_space(3),
    "s2xs6": lambda: product(sphere_2(7), sphere_6()),
    "cp5": lambda: complex_projective_space(5),
    "cp2xs6": lambda: product(complex_projective_space(2), sphere_6()),
    "s6xs6": lambda: product(sphere_6(), sphere_6(1, 3)),
}


def builtin_fixture(name: str) -> FixedPointDataset:
    """Look up a built-in dataset by file stem (``cp5``, ``s2xs6``, ...).

    Raises:
        KeyError: For an unknown name.
    """
    try:
        factory = BUILTIN_FIXTURES[name]
    except KeyError:
        known = ", ".join(BUILTIN_FIXTURES)
        msg = f"unknown fixture {name!r}; known: {known}"
        raise KeyError(msg) from None
    return factory()


def builtin_fixtures() -> dict[str, FixedPointDataset]:
    """Every built-in dataset keyed by file stem."""
    return {name: factory() for name, factory in BUILTIN_FIXTURES.items()}


def write_fixtures(directory: Path) -> list[Path]:
    """Write every built-in dataset to ``directory`` as ``<name>.json``.

    Raises:
        OSError: If the directory cannot be created or written.
    """
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for name, dataset in builtin_fixtures().items():
        path = directory / f"{name}.json"
        path.write_text(dump_dataset(dataset), encoding="utf-8")
        written.append(path)
        logger.info("Wrote %s", path)
    return written
