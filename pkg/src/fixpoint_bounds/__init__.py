"""fixpoint-bounds: exact localization invariants of circle actions."""

__version__ = "0.1.0"

from .certifier import certify
from .fixed_points import load_dataset
from .fixed_points import parse_dataset
from .genus import chi_vector
from .localization import abbv_integrate
from .localization import chern_table
from .models import Certificate
from .models import FixedPoint
from .models import FixedPointDataset
from .reproducer import reproduce_theorem
from .reproducer import search_weights

__all__ = [
    "Certificate",
    "FixedPoint",
    "FixedPointDataset",
    "abbv_integrate",
    "certify",
    "chern_table",
    "chi_vector",
    "load_dataset",
    "parse_dataset",
    "reproduce_theorem",
    "search_weights",
]
