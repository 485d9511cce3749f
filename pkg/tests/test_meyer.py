import random

import pytest
from pydantic import ValidationError

from errors import GenusMismatchError
from meyer import (
    MeyerValue,
    check_cocycle_batch,
    check_conjugation_batch,
    meyer_cocycle,
    meyer_cocycle_identity_check,
    random_symplectic_word,
    random_triples,
)
from symplectic import SymplecticMatrix, is_symplectic


class TestHandValues:
    def test_twist_with_itself(self, torus_twists):
        ta, _ = torus_twists
        value = meyer_cocycle(ta, ta)
        assert value.value == 1
        assert value.dim_v == 3

    def test_adjacent_twists(self, torus_twists):
        ta, tb = torus_twists
        assert meyer_cocycle(ta, tb).value == 0

    def test_twist_against_its_inverse(self, torus_twists):
        _, tb = torus_twists
        value = meyer_cocycle(tb.inverse(), tb)
        assert value.value == 0
        assert value.dim_v == 3

    def test_order_six_element(self, torus_twists):
        ta, tb = torus_twists
        value = meyer_cocycle(ta @ tb, ta)
        assert value.value == 1
        assert value.dim_v == 2

    @pytest.mark.parametrize("genus", [1, 2, 3])
    def test_identity_either_side(self, genus):
        rng = random.Random(genus)
        identity = SymplecticMatrix.identity(genus)
        for _ in range(20):
            a = random_symplectic_word(rng, genus)
            assert meyer_cocycle(identity, a).value == 0
            assert meyer_cocycle(a, identity).value == 0

    def test_identity_pair_has_full_kernel(self):
        value = meyer_cocycle(SymplecticMatrix.identity(2), SymplecticMatrix.identity(2))
        assert value.dim_v == 8
        assert value.value == 0

    def test_genus_mismatch(self):
        with pytest.raises(GenusMismatchError):
            meyer_cocycle(SymplecticMatrix.identity(1), SymplecticMatrix.identity(2))
        with pytest.raises(GenusMismatchError):
            meyer_cocycle_identity_check(
                SymplecticMatrix.identity(1), SymplecticMatrix.identity(1), SymplecticMatrix.identity(2)
            )


class TestMeyerValue:
    def test_bounds_enforced(self):
        with pytest.raises(ValidationError):
            MeyerValue(value=3, dim_v=2, genus=2)
        with pytest.raises(ValidationError):
            MeyerValue(value=3, dim_v=6, genus=1)
        with pytest.raises(ValidationError):
            MeyerValue(value=0, dim_v=9, genus=2)

    def test_frozen(self):
        value = MeyerValue(value=1, dim_v=3, genus=1)
        with pytest.raises(ValidationError):
            value.value = 2


class TestRandomWords:
    def test_words_are_symplectic(self, rng):
        for genus in (1, 2, 3):
            for _ in range(10):
                assert is_symplectic(random_symplectic_word(rng, genus).matrix, genus)

    def test_triples_reproducible(self):
        first = random_triples(random.Random(5), 2, 4)
        second = random_triples(random.Random(5), 2, 4)
        assert first == second


class TestIdentityCheck:
    def test_trivial_triple(self):
        identity = SymplecticMatrix.identity(2)
        assert meyer_cocycle_identity_check(identity, identity, identity)

    @pytest.mark.parametrize("genus", [1, 2, 3])
    def test_element_inverse_element(self, genus):
        rng = random.Random(40 + genus)
        for _ in range(15):
            a = random_symplectic_word(rng, genus)
            assert meyer_cocycle_identity_check(a, a.inverse(), a)

    def test_twist_inverse_twist(self, torus_twists):
        ta, tb = torus_twists
        assert meyer_cocycle_identity_check(ta, ta.inverse(), ta)
        assert meyer_cocycle_identity_check(ta @ tb, (ta @ tb).inverse(), ta @ tb)


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_cocycle_laws_small_batch(genus):
    triples = random_triples(random.Random(100 + genus), genus, 25)
    assert check_cocycle_batch(triples) == []
    assert check_conjugation_batch(triples) == []


@pytest.mark.slow
@pytest.mark.parametrize("genus", [1, 2, 3])
def test_cocycle_laws_sweep(genus):
    triples = random_triples(random.Random(1000 + genus), genus, 350)
    assert check_cocycle_batch(triples) == []
    assert check_conjugation_batch(triples) == []
    for a, b, _ in triples:
        value = meyer_cocycle(a, b)
        assert abs(value.value) <= 2 * genus
        assert abs(value.value) <= value.dim_v
