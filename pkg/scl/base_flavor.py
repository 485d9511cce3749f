from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict

from errors import HypothesisViolationError, ParameterRangeError


class SclFlavor(str, Enum):
    FULL = "full"
    HYPERELLIPTIC = "hyperelliptic"
    TORELLI = "torelli"
    TORELLI_REFINED = "torelli-refined"


class SclQuery(BaseModel):
    """Element whose stable commutator length is bounded, and the group it lives in.

    The element is a power t_a^k of a separating twist or a product of s separating
    twists. Boundary components and marked points are carried as metadata only.
    """

    model_config = ConfigDict(frozen=True)

    genus: int
    flavor: SclFlavor = SclFlavor.FULL
    power: Optional[int] = None
    factors: Optional[int] = None
    side_genus: Optional[int] = None
    boundary_components: int = 0
    marked_points: int = 0


def slope(genus: int) -> int:
    """6(3h-1): separating fibers allowed per unit of base genus"""
    return 6 * (3 * genus - 1)


class BaseSclFlavor(ABC):
    """Lower bound on scl in one subgroup of the mapping class group"""

    name: SclFlavor
    min_genus: int = 2

    def check_query(self, query: SclQuery) -> None:
        if query.genus < self.min_genus:
            raise HypothesisViolationError(
                f"{self.name.value} bound needs genus >= {self.min_genus}, got {query.genus}"
            )
        if query.power is not None and query.factors is not None:
            raise ParameterRangeError("give either a power or a factor count, not both")
        if query.power is not None and query.power < 1:
            raise ParameterRangeError(f"power must be at least 1, got {query.power}")
        if query.factors is not None and query.factors < 1:
            raise ParameterRangeError(f"factor count must be at least 1, got {query.factors}")
        if query.side_genus is not None and not 1 <= query.side_genus <= query.genus - 1:
            raise ParameterRangeError(f"side genus {query.side_genus} outside 1..{query.genus - 1}")

    @abstractmethod
    def base_power(self, genus: int) -> int:
        """Smallest power of a separating twist the bound is stated for"""

    @abstractmethod
    def denominator(self, genus: int) -> int:
        """Separating fibers per unit of base genus in the governing inequality"""

    def element_power(self, query: SclQuery) -> int:
        if query.factors is not None:
            raise ParameterRangeError(f"{self.name.value} bounds are stated for powers of one twist, not factor counts")
        base = self.base_power(query.genus)
        if query.power is None:
            return base
        if query.power % base:
            raise ParameterRangeError(
                f"t_a^{query.power} is not known to lie in the commutator subgroup; use a multiple of {base}"
            )
        return query.power

    def lower_bound(self, query: SclQuery) -> Fraction:
        self.check_query(query)
        return Fraction(self.element_power(query), self.denominator(query.genus))

    def describe(self) -> Dict[str, str]:
        return {"flavor": self.name.value, "class": type(self).__name__, "min_genus": str(self.min_genus)}
