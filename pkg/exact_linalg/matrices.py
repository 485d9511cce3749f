from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from errors import DimensionMismatchError

Scalar = Union[int, Fraction]


class _DenseMatrix:
    """Immutable dense matrix, row-major; subclasses fix the entry ring"""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(self._coerce(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return type(self), (self.entries,)

    @staticmethod
    def _coerce(x: Scalar) -> Scalar:
        raise NotImplementedError

    @classmethod
    def _wrap(cls, rows: Tuple[Tuple[Scalar, ...], ...]) -> "_DenseMatrix":
        # trusted constructor for results of internal arithmetic
        obj = cls.__new__(cls)
        object.__setattr__(obj, "rows", len(rows))
        object.__setattr__(obj, "cols", len(rows[0]))
        object.__setattr__(obj, "entries", rows)
        return obj

    # ---------- construction ----------
    @classmethod
    def identity(cls, n: int):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls([[0] * cols for _ in range(rows)])

    # ---------- shape ----------
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    # ---------- arithmetic ----------
    def _result_type(self, other: "_DenseMatrix"):
        if isinstance(self, RatMatrix) or isinstance(other, RatMatrix):
            return RatMatrix
        return IntMatrix

    def __add__(self, other: "_DenseMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        kind = self._result_type(other)
        return kind._wrap(tuple(
            tuple(kind._coerce(a + b) for a, b in zip(r, s))
            for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "_DenseMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        kind = self._result_type(other)
        return kind._wrap(tuple(
            tuple(kind._coerce(a - b) for a, b in zip(r, s))
            for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self):
        return type(self)._wrap(tuple(tuple(-a for a in r) for r in self.entries))

    def __matmul__(self, other: "_DenseMatrix"):
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        kind = self._result_type(other)
        other_cols = list(zip(*other.entries))
        return kind._wrap(tuple(
            tuple(kind._coerce(sum(a * b for a, b in zip(r, c))) for c in other_cols)
            for r in self.entries
        ))

    def scale(self, factor: Scalar):
        kind = RatMatrix if isinstance(factor, Fraction) else type(self)
        return kind._wrap(tuple(tuple(kind._coerce(factor * a) for a in r) for r in self.entries))

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """Matrix times column vector"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum(a * x for a, x in zip(r, vector)) for r in self.entries)

    def transpose(self):
        return type(self)._wrap(tuple(zip(*self.entries)))

    def hstack(self, other: "_DenseMatrix"):
        if self.rows != other.rows:
            raise DimensionMismatchError(f"cannot stack {self.shape} beside {other.shape}")
        kind = self._result_type(other)
        return kind._wrap(tuple(
            tuple(kind._coerce(x) for x in r + s) for r, s in zip(self.entries, other.entries)
        ))

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_identity(self) -> bool:
        return self.is_square() and all(
            a == (1 if i == j else 0)
            for i, r in enumerate(self.entries) for j, a in enumerate(r)
        )

    def to_rational(self) -> "RatMatrix":
        return RatMatrix._wrap(tuple(tuple(Fraction(a) for a in r) for r in self.entries))

    def to_lists(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]

    # ---------- comparison ----------
    def __eq__(self, other) -> bool:
        if not isinstance(other, _DenseMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.entries)
        return f"{type(self).__name__}([{body}])"


class IntMatrix(_DenseMatrix):
    """Matrix over the integers (arbitrary precision)"""

    __slots__ = ()

    @staticmethod
    def _coerce(x: Scalar) -> int:
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise DimensionMismatchError(f"non-integral entry {x!r} in IntMatrix")


class RatMatrix(_DenseMatrix):
    """Matrix over the rationals; Fraction keeps every entry in lowest terms"""

    __slots__ = ()

    @staticmethod
    def _coerce(x: Scalar) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)


def vector_is_zero(vector: Iterable[Scalar]) -> bool:
    return all(x == 0 for x in vector)
