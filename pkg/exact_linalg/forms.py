import logging
from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from errors import NonSymmetricError
from .matrices import RatMatrix, _DenseMatrix

logger = logging.getLogger(__name__)

RationalVector = Tuple[Fraction, ...]


class SignatureTriple(BaseModel):
    """Inertia (pos, zero, neg) of a symmetric bilinear form"""

    model_config = ConfigDict(frozen=True)

    pos: int
    zero: int
    neg: int

    @model_validator(mode="after")
    def _non_negative(self):
        if min(self.pos, self.zero, self.neg) < 0:
            raise ValueError("inertia counts must be non-negative")
        return self

    @property
    def dimension(self) -> int:
        return self.pos + self.zero + self.neg

    @property
    def signature(self) -> int:
        return self.pos - self.neg

    @property
    def rank(self) -> int:
        return self.pos + self.neg


def _reduced_row_echelon(m: _DenseMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Gauss-Jordan elimination over Q; returns the RREF rows and the pivot columns"""
    a = [[Fraction(x) for x in row] for row in m.entries]
    n_rows, n_cols = m.rows, m.cols
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if a[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            a[piv_r], a[i_row] = a[i_row], a[piv_r]
        fp = a[piv_r][piv_c]
        if fp != 1:
            a[piv_r] = [x / fp for x in a[piv_r]]
        pivot_row = a[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = a[r][piv_c]
            if fr == 0:
                continue
            a[r] = [x - fr * y for x, y in zip(a[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
    return a, pivots


def rank(m: _DenseMatrix) -> int:
    return len(_reduced_row_echelon(m)[1])


def kernel_basis(m: _DenseMatrix) -> List[RationalVector]:
    """Basis of {v : M v = 0}, one vector per free column of the RREF"""
    reduced, pivots = _reduced_row_echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis: List[RationalVector] = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def signature_of_symmetric(s: _DenseMatrix) -> SignatureTriple:
    """Inertia of a symmetric matrix by exact congruence diagonalization.

    Diagonal pivots are taken where available; if the remaining block has a zero
    diagonal but a nonzero entry s_ij, row/column j is added to row/column i, which
    puts 2*s_ij on the diagonal.
    """
    if not s.is_symmetric():
        raise NonSymmetricError(f"matrix of shape {s.shape} is not symmetric")
    a = [[Fraction(x) for x in row] for row in s.entries]
    n = s.rows
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            for c in range(k, n):
                a[i][c] += a[j][c]
            for r in range(k, n):
                a[r][i] += a[r][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        pivot_row = a[k]
        for i in range(k + 1, n):
            f = a[i][k]
            if f == 0:
                continue
            f = f / d
            row = a[i]
            for c in range(k + 1, n):
                row[c] -= f * pivot_row[c]
        k += 1
    result = SignatureTriple(pos=pos, zero=n - pos - neg, neg=neg)
    logger.debug(f"signature of {n}x{n} form: {result.pos}/{result.zero}/{result.neg}")
    return result


def gram_matrix(vectors: List[RationalVector], form: _DenseMatrix) -> RatMatrix:
    """Matrix of the bilinear form (u, v) -> u^T F v on the given vectors"""
    images = [form.apply(v) for v in vectors]
    return RatMatrix([[sum(a * b for a, b in zip(u, w)) for w in images] for u in vectors])
