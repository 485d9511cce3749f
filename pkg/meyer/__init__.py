from .cocycle import MEYER_ORIENTATION, MeyerValue, meyer_cocycle, meyer_cocycle_identity_check
from .property_driver import (
    check_cocycle_batch,
    check_conjugation_batch,
    random_symplectic_word,
    random_triples,
)

__all__ = [
    "MEYER_ORIENTATION",
    "MeyerValue",
    "check_cocycle_batch",
    "check_conjugation_batch",
    "meyer_cocycle",
    "meyer_cocycle_identity_check",
    "random_symplectic_word",
    "random_triples",
]
