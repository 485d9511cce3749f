from .base_flavor import BaseSclFlavor, SclFlavor, SclQuery, slope


class FullMappingClassFlavor(BaseSclFlavor):
    """Whole mapping class group: ||g|| >= s / 6(3h-1) for a product of s separating twists"""

    name = SclFlavor.FULL

    def base_power(self, genus: int) -> int:
        return 1

    def denominator(self, genus: int) -> int:
        return slope(genus)

    def element_power(self, query: SclQuery) -> int:
        if query.factors is not None:
            return query.factors
        return query.power if query.power is not None else 1
