import logging
from typing import Dict, List, Type, Union

from .base_flavor import BaseSclFlavor, SclFlavor
from .full import FullMappingClassFlavor
from .hyperelliptic import HyperellipticFlavor
from .torelli import TorelliFlavor, TorelliRefinedFlavor

logger = logging.getLogger(__name__)


class SclFlavorFactory:
    """Factory class handing out one cached instance per subgroup flavor"""

    _flavors: Dict[SclFlavor, BaseSclFlavor] = {}

    FLAVOR_CLASSES: Dict[SclFlavor, Type[BaseSclFlavor]] = {
        SclFlavor.FULL: FullMappingClassFlavor,
        SclFlavor.HYPERELLIPTIC: HyperellipticFlavor,
        SclFlavor.TORELLI: TorelliFlavor,
        SclFlavor.TORELLI_REFINED: TorelliRefinedFlavor,
    }

    @classmethod
    def _normalize(cls, flavor: Union[str, SclFlavor]) -> SclFlavor:
        if isinstance(flavor, SclFlavor):
            return flavor
        key = flavor.lower().strip().replace("_", "-")
        try:
            return SclFlavor(key)
        except ValueError:
            raise ValueError(
                f"Unsupported flavor: {flavor}. Available flavors: {cls.get_available_flavors()}"
            ) from None

    @classmethod
    def get_flavor(cls, flavor: Union[str, SclFlavor]) -> BaseSclFlavor:
        key = cls._normalize(flavor)
        if key not in cls._flavors:
            cls._flavors[key] = cls.FLAVOR_CLASSES[key]()
            logger.debug(f"created {cls.FLAVOR_CLASSES[key].__name__}")
        return cls._flavors[key]

    @classmethod
    def get_available_flavors(cls) -> List[str]:
        return [f.value for f in cls.FLAVOR_CLASSES]

    @classmethod
    def get_flavor_info(cls, flavor: Union[str, SclFlavor]) -> Dict[str, str]:
        return cls.get_flavor(flavor).describe()

    @classmethod
    def clear_cache(cls) -> None:
        cls._flavors.clear()
