import logging
from typing import List, Optional, Sequence, Union

from joblib import Parallel, delayed

from errors import BaseGenusTooSmallError, FlatPairCountMismatchError, ParameterRangeError
from meyer import meyer_cocycle
from symplectic import SymplecticMatrix, commutator, standard_form, transvection
from wordlang import Word, elaborate, letter_curve, positive_letters
from .data import FibrationData

logger = logging.getLogger(__name__)


def euler_number(base_genus: int, fiber_genus: int, s: int, n: int) -> int:
    """chi(X) = 4(g-1)(h-1) + s + n"""
    return 4 * (base_genus - 1) * (fiber_genus - 1) + s + n


def euler_characteristic(data: FibrationData) -> int:
    return euler_number(data.base_genus, data.fiber_genus, data.s, data.n)


def monodromy_image(word: Word, genus: int) -> SymplecticMatrix:
    """Left-to-right product of the transvection images of the elaborated letters"""
    form = standard_form(genus)
    result = SymplecticMatrix.identity(genus)
    for signed in elaborate(word):
        t = transvection(form, letter_curve(signed.letter, genus))
        result = result @ (t.inverse() if signed.inverse else t)
    return result


def _cycles_image(data: FibrationData) -> SymplecticMatrix:
    form = standard_form(data.fiber_genus)
    result = SymplecticMatrix.identity(data.fiber_genus)
    for curve in data.vanishing_cycles:
        result = result @ transvection(form, curve)
    return result


def flat_image(data: FibrationData) -> SymplecticMatrix:
    """Product of the commutators [Phi(A_i), Phi(B_i)] of the flat pairs"""
    result = SymplecticMatrix.identity(data.fiber_genus)
    for left, right in data.flat_pairs:
        result = result @ commutator(
            monodromy_image(left, data.fiber_genus), monodromy_image(right, data.fiber_genus)
        )
    return result


def sp_consistency(data: FibrationData) -> bool:
    """Boundary monodromies of the disk part and the flat part agree in Sp(2h, Z).

    Necessary for the closed fibration to exist, not sufficient.
    """
    if len(data.flat_pairs) != data.base_genus:
        raise FlatPairCountMismatchError(
            f"base genus {data.base_genus} needs {data.base_genus} flat pairs, got {len(data.flat_pairs)}"
        )
    return _cycles_image(data) == flat_image(data)


def _meyer_term(prefix: SymplecticMatrix, twist: SymplecticMatrix) -> int:
    return meyer_cocycle(prefix, twist).value


def signature_from_cycles(curves: Sequence, genus: int, n_jobs: int = 1) -> int:
    """sigma(X_1) = -sum_j tau(P_j, T_{j+1}) - s for a positive factorization"""
    form = standard_form(genus)
    twists = [transvection(form, c) for c in curves]
    prefixes: List[SymplecticMatrix] = []
    current = SymplecticMatrix.identity(genus)
    for t in twists:
        current = current @ t
        prefixes.append(current)
    pairs = list(zip(prefixes[:-1], twists[1:]))
    if n_jobs == 1 or len(pairs) < 2:
        terms = [_meyer_term(p, t) for p, t in pairs]
    else:
        terms = Parallel(n_jobs=n_jobs)(delayed(_meyer_term)(p, t) for p, t in pairs)
    s = sum(1 for c in curves if c.separating)
    logger.debug(f"Meyer sum over {len(curves)} letters at genus {genus}: {sum(terms)}, s = {s}")
    return -sum(terms) - s


def signature_over_disk(word: Union[Word, FibrationData], genus: Optional[int] = None, n_jobs: int = 1) -> int:
    if isinstance(word, FibrationData):
        return signature_from_cycles(word.vanishing_cycles, word.fiber_genus, n_jobs)
    if genus is None:
        raise ParameterRangeError("a bare word needs the fiber genus")
    letters = positive_letters(word)
    return signature_from_cycles([letter_curve(l, genus) for l in letters], genus, n_jobs)


def signature_upper_closed(data: FibrationData) -> int:
    """Upper bound 2h(2g-2) + n - s for sigma of the closed fibration (after finite covers)"""
    if data.base_genus < 1:
        raise BaseGenusTooSmallError(f"base genus must be at least 1, got {data.base_genus}")
    return 2 * data.fiber_genus * (2 * data.base_genus - 2) + data.n - data.s
