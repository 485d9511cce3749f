from functools import lru_cache
from typing import Sequence

from errors import DimensionMismatchError, GenusMismatchError, NotSymplecticError
from exact_linalg import IntMatrix


class SymplecticForm:
    """Standard symplectic form on H_1 of a genus-h surface.

    Basis order a_1, b_1, ..., a_h, b_h; J is block diagonal with blocks [[0, 1], [-1, 0]],
    so <a_i, b_i> = 1 and <x, y> = x^T J y.
    """

    __slots__ = ("genus", "J")

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError(f"genus must be at least 1, got {genus}")
        n = 2 * genus
        rows = [[0] * n for _ in range(n)]
        for i in range(genus):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        self.genus = genus
        self.J = IntMatrix(rows)

    @property
    def dimension(self) -> int:
        return 2 * self.genus

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.dimension or len(y) != self.dimension:
            raise DimensionMismatchError(f"pairing expects vectors of length {self.dimension}")
        total = 0
        for i in range(self.genus):
            total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticForm) and other.genus == self.genus

    def __hash__(self) -> int:
        return hash(("SymplecticForm", self.genus))

    def __repr__(self) -> str:
        return f"SymplecticForm(genus={self.genus})"


@lru_cache(maxsize=None)
def standard_form(genus: int) -> SymplecticForm:
    return SymplecticForm(genus)


def is_symplectic(m: IntMatrix, genus: int) -> bool:
    """True iff M^T J M = J for the standard form of the given genus"""
    n = 2 * genus
    if m.shape != (n, n):
        raise DimensionMismatchError(f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}")
    J = standard_form(genus).J
    return m.transpose() @ J @ m == J


class SymplecticMatrix:
    """Element of Sp(2h, Z); the invariant M^T J M = J is checked at construction"""

    __slots__ = ("genus", "matrix")

    def __init__(self, matrix: IntMatrix, genus: int):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix.entries)
        if not is_symplectic(matrix, genus):
            raise NotSymplecticError(f"matrix does not preserve the genus-{genus} symplectic form")
        self.genus = genus
        self.matrix = matrix

    @classmethod
    def _trusted(cls, matrix: IntMatrix, genus: int) -> "SymplecticMatrix":
        # products and inverses of symplectic matrices stay symplectic
        obj = cls.__new__(cls)
        obj.genus = genus
        obj.matrix = matrix
        return obj

    @classmethod
    def identity(cls, genus: int) -> "SymplecticMatrix":
        return cls._trusted(IntMatrix.identity(2 * genus), genus)

    def _check_genus(self, other: "SymplecticMatrix") -> None:
        if other.genus != self.genus:
            raise GenusMismatchError(f"genus {self.genus} vs genus {other.genus}")

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        self._check_genus(other)
        return SymplecticMatrix._trusted(self.matrix @ other.matrix, self.genus)

    def inverse(self) -> "SymplecticMatrix":
        # A^{-1} = J^{-1} A^T J = -J A^T J
        J = standard_form(self.genus).J
        return SymplecticMatrix._trusted(-(J @ self.matrix.transpose() @ J), self.genus)

    def conjugate(self, g: "SymplecticMatrix") -> "SymplecticMatrix":
        """g A g^{-1}"""
        return g @ self @ g.inverse()

    def power(self, exponent: int) -> "SymplecticMatrix":
        base = self if exponent >= 0 else self.inverse()
        result = SymplecticMatrix.identity(self.genus)
        for _ in range(abs(exponent)):
            result = result @ base
        return result

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return self.genus == other.genus and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.genus, self.matrix))

    def __repr__(self) -> str:
        return f"SymplecticMatrix(genus={self.genus}, {self.matrix!r})"


def commutator(a: SymplecticMatrix, b: SymplecticMatrix) -> SymplecticMatrix:
    """[A, B] = A B A^{-1} B^{-1}"""
    return a @ b @ a.inverse() @ b.inverse()
