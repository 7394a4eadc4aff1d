"""Fixed-point datasets: parsing, N-profiles and per-point weight data."""

from __future__ import annotations

import json
import math
from typing import TYPE_CHECKING
from typing import Any

from pydantic import ValidationError

from .errors import DatasetError
from .logging import get_logger
from .models import FixedPoint
from .models import FixedPointDataset
from .models import NProfile

if TYPE_CHECKING:
    from pathlib import Path

logger = get_logger(__name__)

KNOWN_FIELDS = frozenset({"n", "points", "label"})
KNOWN_POINT_FIELDS = frozenset({"weights", "id"})


def _point_payload(index: int, point: object, warnings: list[str]) -> object:
    if not isinstance(point, dict):
        return point
    warnings.extend(
        f"unknown field {name!r} in point {index} ignored"
        for name in sorted(set(point) - KNOWN_POINT_FIELDS)
    )
    return {k: v for k, v in point.items() if k in KNOWN_POINT_FIELDS}


def parse_dataset(text: str) -> FixedPointDataset:
    """Parse and validate a dataset document.

    The document is a JSON object with ``n``, ``points`` (a list of length-n
    integer lists) and an optional ``label``. Unknown fields are dropped and
    recorded as warnings on the dataset rather than rejected.

    Args:
        text: JSON document

    Returns:
        Validated dataset, weights exactly as given

    Raises:
        DatasetError: If the document is malformed, a weight is zero, the
            weight vectors are ragged or there are no points.

    >>> parse_dataset('{"n": 2, "points": [[1, 2], [-1, 1], [-2, -1]]}').point_count
    3
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"dataset is not valid JSON: {e}"
        raise DatasetError(msg) from e
    if not isinstance(raw, dict):
        msg = "dataset must be a JSON object with fields n, points and label"
        raise DatasetError(msg)

    unknown = sorted(set(raw) - KNOWN_FIELDS)
    warnings = [f"unknown field {name!r} ignored" for name in unknown]
    payload: dict[str, Any] = {k: v for k, v in raw.items() if k in KNOWN_FIELDS}
    if isinstance(payload.get("points"), list):
        payload["points"] = [
            _point_payload(index, point, warnings)
            for index, point in enumerate(payload["points"])
        ]
    for warning in warnings:
        logger.warning("Dataset ingest: %s", warning)

    try:
        return FixedPointDataset.model_validate(
            {**payload, "warnings": tuple(warnings)}
        )
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "dataset"
        msg = f"invalid dataset at {where}: {first['msg']}"
        raise DatasetError(msg) from e


def load_dataset(path: Path) -> FixedPointDataset:
    """Read and parse a dataset file.

    Raises:
        DatasetError: If the file cannot be read or parsed.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        msg = f"cannot read dataset {path}: {e.strerror or e}"
        raise DatasetError(msg) from e
    except UnicodeDecodeError as e:
        msg = f"dataset {path} is not UTF-8 text: {e.reason} at byte {e.start}"
        raise DatasetError(msg) from e
    dataset = parse_dataset(text)
    logger.info("Loaded %s from %s", dataset.display_name, path)
    return dataset


def dump_dataset(dataset: FixedPointDataset) -> str:
    """Serialize a dataset in the on-disk format."""
    document: dict[str, Any] = {"n": dataset.n}
    if dataset.label is not None:
        document["label"] = dataset.label
    document["points"] = [list(w) for w in dataset.weight_vectors()]
    return json.dumps(document, indent=2) + "\n"


def negative_count(point: FixedPoint) -> int:
    """Number of strictly negative weights at ``point``."""
    return sum(1 for w in point.weights if w < 0)


def n_profile(dataset: FixedPointDataset) -> NProfile:
    """Count fixed points by their number of negative weights."""
    counts = [0] * (dataset.n + 1)
    for point in dataset.points:
        counts[negative_count(point)] += 1
    return NProfile(counts=tuple(counts))


def weight_sum(point: FixedPoint) -> int:
    """Sum of the weights, i.e. the first Chern class at the point."""
    return sum(point.weights)


def weight_product(point: FixedPoint) -> int:
    """Product of the weights, i.e. the equivariant Euler class at the point."""
    return math.prod(point.weights)
