from functools import lru_cache, reduce
from math import gcd
from typing import List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from typing_extensions import Annotated

from errors import DimensionMismatchError, NonPrimitiveVectorError, SideGenusOutOfRangeError
from exact_linalg import IntMatrix
from .form import SymplecticForm, SymplecticMatrix, standard_form


class NonseparatingCurve(BaseModel):
    """Vanishing cycle recorded by its primitive homology class"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["nonseparating"] = "nonseparating"
    vector: Tuple[int, ...]

    @property
    def separating(self) -> bool:
        return False

    def validate_for_genus(self, genus: int) -> None:
        if len(self.vector) != 2 * genus:
            raise DimensionMismatchError(
                f"homology vector has length {len(self.vector)}, genus {genus} needs {2 * genus}"
            )
        if reduce(gcd, self.vector, 0) != 1:
            raise NonPrimitiveVectorError(f"vector {list(self.vector)} is not primitive")


class SeparatingCurve(BaseModel):
    """Separating vanishing cycle cutting off a subsurface of genus side_genus"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["separating"] = "separating"
    side_genus: int

    @property
    def separating(self) -> bool:
        return True

    def validate_for_genus(self, genus: int) -> None:
        if not 1 <= self.side_genus <= genus - 1:
            raise SideGenusOutOfRangeError(
                f"side genus {self.side_genus} outside 1..{genus - 1} for genus {genus}"
            )


CurveClass = Annotated[Union[NonseparatingCurve, SeparatingCurve], Field(discriminator="kind")]


def transvection(form: SymplecticForm, curve: Union[NonseparatingCurve, SeparatingCurve]) -> SymplecticMatrix:
    """Action on homology of the right-handed Dehn twist: x -> x + <x, v> v.

    Separating curves are null-homologous, so their twists act trivially.
    """
    curve.validate_for_genus(form.genus)
    return _transvection(form.genus, curve)


@lru_cache(maxsize=4096)
def _transvection(genus: int, curve: Union[NonseparatingCurve, SeparatingCurve]) -> SymplecticMatrix:
    if curve.separating:
        return SymplecticMatrix.identity(genus)
    v = curve.vector
    n = 2 * genus
    # <x, v> = (J v) . x, so T = I + v (J v)^T
    jv = standard_form(genus).J.apply(v)
    rows = [[(1 if i == j else 0) + v[i] * jv[j] for j in range(n)] for i in range(n)]
    return SymplecticMatrix(IntMatrix(rows), genus)


def _unit(genus: int, index: int, sign: int = 1) -> List[int]:
    v = [0] * (2 * genus)
    v[index] = sign
    return v


def chain_curves(genus: int) -> List[NonseparatingCurve]:
    """Classes c_1..c_{2h+1} of the standard chain.

    c_{2i-1} = a_i - a_{i-1} (a_0 = 0), c_{2i} = b_i, c_{2h+1} = -a_h.
    """
    return list(_chain(genus))


@lru_cache(maxsize=None)
def _chain(genus: int) -> Tuple[NonseparatingCurve, ...]:
    if genus < 1:
        raise ValueError(f"genus must be at least 1, got {genus}")
    curves: List[NonseparatingCurve] = []
    for i in range(genus):
        odd = _unit(genus, 2 * i)
        if i > 0:
            odd[2 * (i - 1)] = -1
        curves.append(NonseparatingCurve(vector=tuple(odd)))
        curves.append(NonseparatingCurve(vector=tuple(_unit(genus, 2 * i + 1))))
    curves.append(NonseparatingCurve(vector=tuple(_unit(genus, 2 * genus - 2, -1))))
    return tuple(curves)
