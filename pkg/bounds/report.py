import logging
from enum import Enum
from typing import Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from fibration import FibrationData
from .inequalities import (
    B2Bounds,
    CanonicalChain,
    b2_bounds,
    canonical_chain,
    separating_bound,
    torelli_separating_bound,
)

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    CONSISTENT = "Consistent"
    NO_SUCH_FIBRATION = "NoSuchFibration"


class BoundInputs(BaseModel):
    model_config = ConfigDict(frozen=True)

    base_genus: int
    fiber_genus: int
    s: int
    n: int
    torelli: bool = False


class BoundEntry(BaseModel):
    """One checked inequality: value <= bound"""

    model_config = ConfigDict(frozen=True)

    name: str
    value: int
    bound: int
    satisfied: bool


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    inputs: BoundInputs
    entries: Tuple[BoundEntry, ...]
    chain: CanonicalChain
    torelli_chain: Optional[CanonicalChain] = None
    betti: B2Bounds
    verdict: Verdict

    @property
    def failed(self) -> Tuple[str, ...]:
        return tuple(e.name for e in self.entries if not e.satisfied)


def _entry(name: str, value: int, bound: int) -> BoundEntry:
    return BoundEntry(name=name, value=value, bound=bound, satisfied=value <= bound)


def check(
    data: Union[FibrationData, BoundInputs, None] = None,
    *,
    base_genus: Optional[int] = None,
    fiber_genus: Optional[int] = None,
    s: Optional[int] = None,
    n: Optional[int] = None,
    torelli: bool = False,
) -> BoundReport:
    """Evaluate every inequality for the given counts, in derivation order.

    Accepts a FibrationData, a BoundInputs record or the four counts as keywords.
    """
    if isinstance(data, FibrationData):
        inputs = BoundInputs(base_genus=data.base_genus, fiber_genus=data.fiber_genus,
                             s=data.s, n=data.n, torelli=torelli)
    elif isinstance(data, BoundInputs):
        inputs = data
    else:
        inputs = BoundInputs(base_genus=base_genus, fiber_genus=fiber_genus, s=s, n=n, torelli=torelli)
    g, h = inputs.base_genus, inputs.fiber_genus

    chain = canonical_chain(g, h, inputs.s, inputs.n)
    entries = [
        _entry("canonical_chain", chain.kneser_lower, chain.genus_sigma_upper),
        _entry("separating_bound", inputs.s, separating_bound(g, h, inputs.n)),
    ]
    torelli_chain = None
    if inputs.torelli:
        torelli_chain = canonical_chain(g, h, inputs.s, inputs.n, torelli=True)
        entries.append(_entry("torelli_canonical_chain", torelli_chain.kneser_lower, torelli_chain.genus_sigma_upper))
        entries.append(_entry("torelli_separating_bound", inputs.s, torelli_separating_bound(g, h, inputs.n)))

    verdict = Verdict.CONSISTENT if all(e.satisfied for e in entries) else Verdict.NO_SUCH_FIBRATION
    report = BoundReport(
        inputs=inputs,
        entries=tuple(entries),
        chain=chain,
        torelli_chain=torelli_chain,
        betti=b2_bounds(inputs.s, g),
        verdict=verdict,
    )
    if report.failed:
        logger.info(f"no fibration with g={g}, h={h}, s={inputs.s}, n={inputs.n}: {', '.join(report.failed)} fails")
    return report
