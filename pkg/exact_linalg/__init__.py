from .matrices import IntMatrix, RatMatrix, vector_is_zero
from .forms import SignatureTriple, gram_matrix, kernel_basis, rank, signature_of_symmetric

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "SignatureTriple",
    "gram_matrix",
    "kernel_basis",
    "rank",
    "signature_of_symmetric",
    "vector_is_zero",
]
