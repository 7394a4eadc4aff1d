"""Exact univariate algebra over the rationals."""

from .laurent import GEN
from .laurent import ONE
from .laurent import ZERO
from .laurent import BigRational
from .laurent import LaurentPolynomial
from .laurent import format_rational
from .laurent import to_rational
from .rational_function import ONE_FUNCTION
from .rational_function import ZERO_FUNCTION
from .rational_function import RationalFunction
from .rational_function import ratfun_add
from .rational_function import ratfun_constant_value
from .rational_function import ratfun_eval
from .rational_function import ratfun_mul
from .rational_function import ratfun_reduce

__all__ = [
    "GEN",
    "ONE",
    "ONE_FUNCTION",
    "ZERO",
    "ZERO_FUNCTION",
    "BigRational",
    "LaurentPolynomial",
    "RationalFunction",
    "format_rational",
    "ratfun_add",
    "ratfun_constant_value",
    "ratfun_eval",
    "ratfun_mul",
    "ratfun_reduce",
    "to_rational",
]
