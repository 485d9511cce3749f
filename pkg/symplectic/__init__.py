from .form import SymplecticForm, SymplecticMatrix, commutator, is_symplectic, standard_form
from .curves import (
    CurveClass,
    NonseparatingCurve,
    SeparatingCurve,
    chain_curves,
    transvection,
)

__all__ = [
    "CurveClass",
    "NonseparatingCurve",
    "SeparatingCurve",
    "SymplecticForm",
    "SymplecticMatrix",
    "chain_curves",
    "commutator",
    "is_symplectic",
    "standard_form",
    "transvection",
]
