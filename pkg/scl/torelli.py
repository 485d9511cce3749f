from .base_flavor import BaseSclFlavor, SclFlavor, slope


class TorelliFlavor(BaseSclFlavor):
    """Torelli group, h >= 3: squares of separating twists are products of commutators"""

    name = SclFlavor.TORELLI
    min_genus = 3

    def base_power(self, genus: int) -> int:
        return 2

    def denominator(self, genus: int) -> int:
        return slope(genus)


class TorelliRefinedFlavor(TorelliFlavor):
    """Same element, bounded through the Torelli signature estimate sigma <= n - s"""

    name = SclFlavor.TORELLI_REFINED

    def denominator(self, genus: int) -> int:
        return 6 * (genus - 1)
