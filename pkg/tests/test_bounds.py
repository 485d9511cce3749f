from fractions import Fraction

import pytest

from bounds import (
    BoundInputs,
    Verdict,
    b2_bounds,
    canonical_chain,
    chain_threshold,
    check,
    separating_bound,
    signature_upper_bound,
    torelli_separating_bound,
)
from errors import HypothesisViolationError, ParameterRangeError
from fibration import build_separating_power

GRID = [(h, g, n) for h in range(2, 11) for g in range(1, 11) for n in range(0, 11)]


def test_separating_bound_closed_form():
    for h, g, n in GRID:
        assert separating_bound(g, h, n) == 6 * (3 * h - 1) * (g - 1) + 5 * n
        assert torelli_separating_bound(g, h, n) == 6 * (h - 1) * (g - 1) + 5 * n


def test_canonical_chain_rearranges_to_the_bound():
    for h, g, n in GRID:
        assert chain_threshold(g, h, n) == separating_bound(g, h, n)
        assert chain_threshold(g, h, n, torelli=True) == torelli_separating_bound(g, h, n)


def test_canonical_chain_values():
    chain = canonical_chain(2, 2, 0, 0)
    assert chain.euler == 4
    assert chain.signature_upper == 8
    assert chain.K2_upper == 32
    assert chain.genus_sigma_upper == 32
    assert chain.degree == 2
    assert chain.kneser_lower == 2
    assert chain.consistent


def test_genus_upper_is_adjunction_of_k2():
    for h, g, n in GRID[::7]:
        for s in (0, 1, 17):
            chain = canonical_chain(g, h, s, n)
            assert chain.genus_sigma_upper == chain.K2_upper
            torelli = canonical_chain(g, h, s, n, torelli=True)
            assert torelli.genus_sigma_upper == torelli.K2_upper


def test_signature_upper_bound():
    assert signature_upper_bound(2, 3, 4, 10) == 2 * 3 * 2 + 10 - 4
    assert signature_upper_bound(2, 3, 4, 10, torelli=True) == 6


@pytest.mark.parametrize(
    "g, h, s, n, verdict",
    [
        (2, 2, 31, 0, Verdict.NO_SUCH_FIBRATION),
        (2, 2, 30, 0, Verdict.CONSISTENT),
        (1, 2, 1, 0, Verdict.NO_SUCH_FIBRATION),
        (1, 2, 5, 1, Verdict.CONSISTENT),
        (1, 2, 6, 1, Verdict.NO_SUCH_FIBRATION),
        (3, 4, 0, 0, Verdict.CONSISTENT),
    ],
)
def test_check_examples(g, h, s, n, verdict):
    assert check(base_genus=g, fiber_genus=h, s=s, n=n).verdict is verdict


def test_report_order_and_failures():
    report = check(base_genus=2, fiber_genus=2, s=31, n=0)
    assert [e.name for e in report.entries] == ["canonical_chain", "separating_bound"]
    assert report.failed == ("canonical_chain", "separating_bound")
    entry = report.entries[1]
    assert (entry.value, entry.bound, entry.satisfied) == (31, 30, False)


def test_torelli_entries():
    plain = check(base_genus=2, fiber_genus=3, s=13, n=0)
    torelli = check(base_genus=2, fiber_genus=3, s=13, n=0, torelli=True)
    assert plain.verdict is Verdict.CONSISTENT
    assert torelli.verdict is Verdict.NO_SUCH_FIBRATION
    assert [e.name for e in torelli.entries] == [
        "canonical_chain", "separating_bound", "torelli_canonical_chain", "torelli_separating_bound",
    ]
    assert torelli.failed == ("torelli_canonical_chain", "torelli_separating_bound")
    assert torelli.torelli_chain is not None and plain.torelli_chain is None


def test_check_accepts_inputs_and_fibrations():
    inputs = BoundInputs(base_genus=2, fiber_genus=2, s=30, n=0)
    assert check(inputs).verdict is Verdict.CONSISTENT
    assert check(build_separating_power(2, 30, 1, 2)).verdict is Verdict.CONSISTENT
    assert check(build_separating_power(2, 31, 1, 2)).verdict is Verdict.NO_SUCH_FIBRATION


def test_monotonicity():
    for h, g, n in GRID[::5]:
        limit = separating_bound(g, h, n)
        for s in (max(limit - 1, 0), limit, limit + 1):
            report = check(base_genus=g, fiber_genus=h, s=s, n=n)
            assert (report.verdict is Verdict.CONSISTENT) == (s <= limit)
            if report.verdict is Verdict.CONSISTENT and s > 0:
                assert check(base_genus=g, fiber_genus=h, s=s - 1, n=n).verdict is Verdict.CONSISTENT
            # one more nonseparating fiber raises the limit by five
            assert check(base_genus=g, fiber_genus=h, s=s, n=n + 1).verdict is Verdict.CONSISTENT


def test_betti_bounds():
    betti = b2_bounds(5, 3)
    assert betti.b1_lower == 6
    assert betti.b2_minus_lower == 6
    assert betti.b2_plus_lower == Fraction(2)
    assert not betti.vacuous
    assert b2_bounds(0, 1).vacuous
    assert b2_bounds(7, 1).b2_plus_lower == Fraction(12, 5)


@pytest.mark.parametrize("g, h", [(0, 2), (1, 1), (2, 0)])
def test_hypotheses(g, h):
    with pytest.raises(HypothesisViolationError):
        check(base_genus=g, fiber_genus=h, s=0, n=0)
    with pytest.raises(HypothesisViolationError):
        separating_bound(g, h, 0)


def test_negative_counts():
    with pytest.raises(ParameterRangeError):
        check(base_genus=2, fiber_genus=2, s=-1, n=0)
    with pytest.raises(ParameterRangeError):
        separating_bound(2, 2, -1)
    with pytest.raises(ParameterRangeError):
        b2_bounds(-1, 2)
