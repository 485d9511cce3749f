"""The inequalities behind the separating-fiber bound, as exact integers and rationals.

For a relatively minimal Lefschetz fibration with fiber genus h >= 2 over a base of
genus g >= 1, with s separating and n nonseparating singular fibers:

    chi        = 4(g-1)(h-1) + s + n
    sigma     <= 2h(2g-2) + n - s            (n - s when the monodromy is Torelli)
    g(Sigma)-1 = K^2 = 2 chi + 3 sigma
    deg(Sigma -> B) = K.F = 2h - 2
    g(Sigma)-1 >= (2h-2)(g-1)                (Kneser)

and the last two lines together give s <= 6(3h-1)(g-1) + 5n.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from errors import HypothesisViolationError, ParameterRangeError
from fibration import euler_number


def require_hypotheses(base_genus: int, fiber_genus: int) -> None:
    if fiber_genus < 2:
        raise HypothesisViolationError(f"fiber genus h = {fiber_genus}; the bound needs h >= 2")
    if base_genus < 1:
        raise HypothesisViolationError(f"base genus g = {base_genus}; the bound needs g >= 1")


def _require_counts(**counts: int) -> None:
    for name, value in counts.items():
        if value < 0:
            raise ParameterRangeError(f"{name} must be non-negative, got {value}")


def separating_bound(base_genus: int, fiber_genus: int, n: int) -> int:
    """Largest s allowed: 6(3h-1)(g-1) + 5n"""
    require_hypotheses(base_genus, fiber_genus)
    _require_counts(n=n)
    return 6 * (3 * fiber_genus - 1) * (base_genus - 1) + 5 * n


def torelli_separating_bound(base_genus: int, fiber_genus: int, n: int) -> int:
    """Largest s allowed when the monodromy lies in the Torelli group: 6(h-1)(g-1) + 5n"""
    require_hypotheses(base_genus, fiber_genus)
    _require_counts(n=n)
    return 6 * (fiber_genus - 1) * (base_genus - 1) + 5 * n


class B2Bounds(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    b1_lower: int
    b2_minus_lower: int
    b2_plus_lower: Fraction
    vacuous: bool


def b2_bounds(s: int, base_genus: int) -> B2Bounds:
    """b2- >= s + 1 and b2+ >= 1 + s/5 (from K^2 >= 0 with b1 >= 2g >= 2)"""
    _require_counts(s=s)
    if base_genus < 1:
        raise HypothesisViolationError(f"base genus g = {base_genus}; the bound needs g >= 1")
    return B2Bounds(
        b1_lower=2 * base_genus,
        b2_minus_lower=s + 1,
        b2_plus_lower=1 + Fraction(s, 5),
        vacuous=s == 0,
    )


class CanonicalChain(BaseModel):
    model_config = ConfigDict(frozen=True)

    euler: int
    signature_upper: int
    K2_upper: int
    genus_sigma_upper: int
    degree: int
    kneser_lower: int
    torelli: bool = False

    @property
    def consistent(self) -> bool:
        return self.kneser_lower <= self.genus_sigma_upper


def signature_upper_bound(base_genus: int, fiber_genus: int, s: int, n: int, torelli: bool = False) -> int:
    if torelli:
        return n - s
    return 2 * fiber_genus * (2 * base_genus - 2) + n - s


def canonical_chain(base_genus: int, fiber_genus: int, s: int, n: int, torelli: bool = False) -> CanonicalChain:
    require_hypotheses(base_genus, fiber_genus)
    _require_counts(s=s, n=n)
    g, h = base_genus, fiber_genus
    chi = euler_number(g, h, s, n)
    sigma_upper = signature_upper_bound(g, h, s, n, torelli)
    k2_upper = 2 * chi + 3 * sigma_upper
    if torelli:
        genus_upper = 8 * (h - 1) * (g - 1) + 5 * n - s
    else:
        genus_upper = 2 * (10 * h - 4) * (g - 1) + 5 * n - s
    degree = 2 * h - 2
    return CanonicalChain(
        euler=chi,
        signature_upper=sigma_upper,
        K2_upper=k2_upper,
        genus_sigma_upper=genus_upper,
        degree=degree,
        kneser_lower=degree * (g - 1),
        torelli=torelli,
    )


def chain_threshold(base_genus: int, fiber_genus: int, n: int, torelli: bool = False) -> int:
    """Largest s for which Kneser's lower bound stays below the adjunction upper bound"""
    chain = canonical_chain(base_genus, fiber_genus, 0, n, torelli)
    # genus_sigma_upper drops by exactly one per separating fiber
    return chain.genus_sigma_upper - chain.kneser_lower
