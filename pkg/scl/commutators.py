from fractions import Fraction
from math import ceil

from errors import HypothesisViolationError, ParameterRangeError
from .base_flavor import SclQuery, slope
from .flavor_factory import SclFlavorFactory


def commutator_count_lower(genus: int, power: int) -> int:
    """Least N with N >= 1 + k / 6(3h-1): t_a^k is not a product of fewer commutators"""
    if genus < 2:
        raise HypothesisViolationError(f"genus must be at least 2, got {genus}")
    if power < 1:
        raise ParameterRangeError(f"power must be at least 1, got {power}")
    return ceil(1 + Fraction(power, slope(genus)))


def scl_lower(query: SclQuery) -> Fraction:
    """Lower bound on the stable commutator length, as a reduced fraction"""
    return SclFlavorFactory.get_flavor(query.flavor).lower_bound(query)
