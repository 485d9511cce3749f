import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from errors import GenusMismatchError
from exact_linalg import IntMatrix, gram_matrix, kernel_basis, signature_of_symmetric
from symplectic import SymplecticMatrix, standard_form

logger = logging.getLogger(__name__)

# Overall sign of tau. With twists acting as x -> x + <x, v> v this is the sign for which
# the word (c1 c2)^6 at genus 1 has signature -8 over the disk.
MEYER_ORIENTATION = -1


class MeyerValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    dim_v: int
    genus: int

    @model_validator(mode="after")
    def _bounded(self):
        if self.dim_v < 0 or self.dim_v > 4 * self.genus:
            raise ValueError(f"dim V = {self.dim_v} outside 0..{4 * self.genus}")
        if abs(self.value) > self.dim_v or abs(self.value) > 2 * self.genus:
            raise ValueError(f"|tau| = {abs(self.value)} exceeds its bound (dim V {self.dim_v}, genus {self.genus})")
        return self


def meyer_cocycle(a: SymplecticMatrix, b: SymplecticMatrix) -> MeyerValue:
    """Meyer's signature cocycle tau_h(A, B).

    V = {(x, y) : (A^{-1} - I) x + (B - I) y = 0}, with the form
    ((x1, y1), (x2, y2)) -> (x1 + y1)^T J (I - B) y2; tau is the signature of its
    symmetrization, times MEYER_ORIENTATION.
    """
    if a.genus != b.genus:
        raise GenusMismatchError(f"cannot pair genus {a.genus} with genus {b.genus}")
    h = a.genus
    n = 2 * h
    identity = IntMatrix.identity(n)
    constraint = (a.inverse().matrix - identity).hstack(b.matrix - identity)
    basis = kernel_basis(constraint)

    # on Q^{4h} the form is z1^T W z2 with W = [[0, K], [0, K]], K = J (I - B)
    k_block = standard_form(h).J @ (identity - b.matrix)
    rows = []
    for i in range(2 * n):
        src = k_block.row(i % n)
        rows.append([0] * n + list(src))
    gram = gram_matrix(basis, IntMatrix(rows))
    half = Fraction(1, 2)
    symmetric = (gram + gram.transpose()).scale(half)
    inertia = signature_of_symmetric(symmetric)
    logger.debug(f"tau on genus {h}: dim V = {len(basis)}, inertia {inertia.pos}/{inertia.zero}/{inertia.neg}")
    return MeyerValue(value=MEYER_ORIENTATION * inertia.signature, dim_v=len(basis), genus=h)


def meyer_cocycle_identity_check(a: SymplecticMatrix, b: SymplecticMatrix, c: SymplecticMatrix) -> bool:
    """tau(A, B) + tau(AB, C) == tau(A, BC) + tau(B, C)"""
    if not a.genus == b.genus == c.genus:
        raise GenusMismatchError(f"genera {a.genus}, {b.genus}, {c.genus} differ")
    left = meyer_cocycle(a, b).value + meyer_cocycle(a @ b, c).value
    right = meyer_cocycle(a, b @ c).value + meyer_cocycle(b, c).value
    return left == right
