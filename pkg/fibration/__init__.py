from .data import FibrationData, build_separating_power
from .invariants import (
    euler_characteristic,
    euler_number,
    flat_image,
    monodromy_image,
    signature_from_cycles,
    signature_over_disk,
    signature_upper_closed,
    sp_consistency,
)

__all__ = [
    "FibrationData",
    "build_separating_power",
    "euler_characteristic",
    "euler_number",
    "flat_image",
    "monodromy_image",
    "signature_from_cycles",
    "signature_over_disk",
    "signature_upper_closed",
    "sp_consistency",
]
