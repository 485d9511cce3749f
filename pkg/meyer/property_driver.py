"""Randomized checks of the cocycle laws, fanned out with joblib."""

import logging
import random
from typing import List, Sequence, Tuple

from joblib import Parallel, delayed

from symplectic import SymplecticMatrix, chain_curves, standard_form, transvection
from .cocycle import meyer_cocycle, meyer_cocycle_identity_check

logger = logging.getLogger(__name__)

Triple = Tuple[SymplecticMatrix, SymplecticMatrix, SymplecticMatrix]


def random_symplectic_word(rng: random.Random, genus: int, max_length: int = 10) -> SymplecticMatrix:
    """Product of up to max_length chain transvections and their inverses"""
    form = standard_form(genus)
    generators = [transvection(form, c) for c in chain_curves(genus)]
    result = SymplecticMatrix.identity(genus)
    for _ in range(rng.randint(0, max_length)):
        t = rng.choice(generators)
        result = result @ (t if rng.random() < 0.5 else t.inverse())
    return result


def random_triples(rng: random.Random, genus: int, count: int, max_length: int = 10) -> List[Triple]:
    return [
        (
            random_symplectic_word(rng, genus, max_length),
            random_symplectic_word(rng, genus, max_length),
            random_symplectic_word(rng, genus, max_length),
        )
        for _ in range(count)
    ]


def _cocycle_holds(triple: Triple) -> bool:
    return meyer_cocycle_identity_check(*triple)


def _conjugation_holds(triple: Triple) -> bool:
    a, b, g = triple
    return meyer_cocycle(a.conjugate(g), b.conjugate(g)).value == meyer_cocycle(a, b).value


def _run(check, samples: Sequence[Triple], n_jobs: int) -> List[int]:
    if n_jobs == 1:
        verdicts = [check(t) for t in samples]
    else:
        verdicts = Parallel(n_jobs=n_jobs)(delayed(check)(t) for t in samples)
    failures = [i for i, ok in enumerate(verdicts) if not ok]
    if failures:
        logger.warning(f"{check.__name__}: {len(failures)} of {len(samples)} samples failed")
    return failures


def check_cocycle_batch(triples: Sequence[Triple], n_jobs: int = 1) -> List[int]:
    """Indices of triples violating tau(A,B) + tau(AB,C) = tau(A,BC) + tau(B,C)"""
    return _run(_cocycle_holds, triples, n_jobs)


def check_conjugation_batch(triples: Sequence[Triple], n_jobs: int = 1) -> List[int]:
    """Indices of (A, B, G) with tau(GAG^-1, GBG^-1) != tau(A, B)"""
    return _run(_conjugation_holds, triples, n_jobs)
