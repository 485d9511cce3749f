from errors import HypothesisViolationError
from .base_flavor import BaseSclFlavor, SclFlavor, slope


def abelianization_order_hyperelliptic(genus: int) -> int:
    """Order of the abelianized hyperelliptic mapping class group: 4(2h+1) for odd h, 2(2h+1) for even h"""
    if genus < 2:
        raise HypothesisViolationError(f"hyperelliptic mapping class group needs genus >= 2, got {genus}")
    return (4 if genus % 2 else 2) * (2 * genus + 1)


class HyperellipticFlavor(BaseSclFlavor):
    """t_a^ord lies in the commutator subgroup for a separating curve a invariant under the involution"""

    name = SclFlavor.HYPERELLIPTIC

    def base_power(self, genus: int) -> int:
        return abelianization_order_hyperelliptic(genus)

    def denominator(self, genus: int) -> int:
        return slope(genus)
