"""Exact counting of partitions of quadratic-field elements into powers of a quadratic beta."""

from .classifier import Classification, Reason, SpecialValue, Verdict, classify, decide_value_special
from .enumerator import (CountContext, count, count_descending, count_integer_base,
                         enumerate_partitions, oracle_count, oracle_partitions)
from .errors import (BetaPartitionError, ConsistencyError, DivisionByZero, DomainError,
                     ReducibleError, RegimeError, ResourceError)
from .mary import bm
from .pell import corollary3_family, fundamental_solution
from .quadfield import QuadElem, QuadPoly, floor_div, parse_elem, roots
from .witness import WitnessFamily

__version__ = "0.1.0"

__all__ = [
    "BetaPartitionError", "Classification", "ConsistencyError", "CountContext",
    "DivisionByZero", "DomainError", "QuadElem", "QuadPoly", "Reason", "ReducibleError",
    "RegimeError", "ResourceError", "SpecialValue", "Verdict", "bm", "classify",
    "corollary3_family", "count", "count_descending", "count_integer_base",
    "decide_value_special", "enumerate_partitions", "floor_div", "fundamental_solution",
    "oracle_count", "oracle_partitions", "parse_elem", "roots", "WitnessFamily",
]
