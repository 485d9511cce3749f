from .base_flavor import BaseSclFlavor, SclFlavor, SclQuery, slope
from .commutators import commutator_count_lower, scl_lower
from .flavor_factory import SclFlavorFactory
from .hyperelliptic import abelianization_order_hyperelliptic

__all__ = [
    "BaseSclFlavor",
    "SclFlavor",
    "SclFlavorFactory",
    "SclQuery",
    "abelianization_order_hyperelliptic",
    "commutator_count_lower",
    "scl_lower",
    "slope",
]
