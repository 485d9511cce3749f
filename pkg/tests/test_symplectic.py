from functools import reduce
from math import gcd

import pytest
from pydantic import TypeAdapter

from errors import (
    DimensionMismatchError,
    GenusMismatchError,
    NonPrimitiveVectorError,
    NotSymplecticError,
    SideGenusOutOfRangeError,
)
from exact_linalg import IntMatrix
from symplectic import (
    CurveClass,
    NonseparatingCurve,
    SeparatingCurve,
    SymplecticMatrix,
    chain_curves,
    commutator,
    is_symplectic,
    standard_form,
    transvection,
)


def test_standard_form_pairs_a_with_b():
    form = standard_form(2)
    assert form.pairing((1, 0, 0, 0), (0, 1, 0, 0)) == 1
    assert form.pairing((0, 1, 0, 0), (1, 0, 0, 0)) == -1
    assert form.pairing((1, 0, 0, 0), (0, 0, 0, 1)) == 0
    assert form.J.to_lists() == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]


def test_pairing_length_checked():
    with pytest.raises(DimensionMismatchError):
        standard_form(1).pairing((1, 0, 0), (0, 1))


def test_chain_vectors_genus_two():
    vectors = [c.vector for c in chain_curves(2)]
    assert vectors == [(1, 0, 0, 0), (0, 1, 0, 0), (-1, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, 0)]


@pytest.mark.parametrize("genus", range(1, 11))
def test_chain_intersections(genus):
    form = standard_form(genus)
    curves = chain_curves(genus)
    for i, ci in enumerate(curves):
        for j, cj in enumerate(curves):
            expected = 1 if j == i + 1 else -1 if i == j + 1 else 0
            assert form.pairing(ci.vector, cj.vector) == expected


def test_transvection_formula(rng):
    form = standard_form(2)
    curve = NonseparatingCurve(vector=(1, -1, 2, 0))
    t = transvection(form, curve)
    assert t.matrix.apply(curve.vector) == curve.vector
    for _ in range(20):
        x = tuple(rng.randint(-3, 3) for _ in range(4))
        expected = tuple(xi + form.pairing(x, curve.vector) * vi for xi, vi in zip(x, curve.vector))
        assert t.matrix.apply(x) == expected


def random_primitive(rng, genus):
    while True:
        v = [rng.randint(-5, 5) for _ in range(2 * genus)]
        d = reduce(gcd, v, 0)
        if d:
            return tuple(x // d for x in v)


@pytest.mark.parametrize("genus", [1, 2, 3, 4, 5])
def test_random_transvections_are_symplectic(genus, rng):
    form = standard_form(genus)
    for _ in range(20):
        v = random_primitive(rng, genus)
        t = transvection(form, NonseparatingCurve(vector=v))
        assert is_symplectic(t.matrix, genus)
        assert t.matrix.apply(v) == v


@pytest.mark.parametrize("genus", [1, 2, 3, 4, 5])
def test_twist_ignores_orientation(genus, rng):
    form = standard_form(genus)
    for _ in range(20):
        v = random_primitive(rng, genus)
        minus = tuple(-x for x in v)
        assert transvection(form, NonseparatingCurve(vector=v)) == transvection(form, NonseparatingCurve(vector=minus))


def test_torus_twist_matrices(torus_twists):
    ta, tb = torus_twists
    assert ta.matrix.to_lists() == [[1, -1], [0, 1]]
    assert tb.matrix.to_lists() == [[1, 0], [1, 1]]


def test_braid_and_chain_relations(torus_twists):
    ta, tb = torus_twists
    assert ta @ tb @ ta == tb @ ta @ tb
    m = ta @ tb
    assert m.power(3) == SymplecticMatrix(-IntMatrix.identity(2), 1)
    assert m.power(6).is_identity()


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_inverse_and_commutator(genus, rng):
    form = standard_form(genus)
    twists = [transvection(form, c) for c in chain_curves(genus)]
    for _ in range(10):
        a = SymplecticMatrix.identity(genus)
        for _ in range(6):
            a = a @ rng.choice(twists)
        assert (a @ a.inverse()).is_identity()
        assert (a.inverse() @ a).is_identity()
        assert commutator(a, a).is_identity()
        assert a.power(-2) == a.inverse() @ a.inverse()
        assert is_symplectic(a.matrix, genus)


def test_separating_twist_is_trivial_on_homology():
    assert transvection(standard_form(3), SeparatingCurve(side_genus=2)).is_identity()


def test_curve_validation():
    form = standard_form(2)
    with pytest.raises(NonPrimitiveVectorError):
        transvection(form, NonseparatingCurve(vector=(2, 0, 0, 2)))
    with pytest.raises(DimensionMismatchError):
        transvection(form, NonseparatingCurve(vector=(1, 0)))
    with pytest.raises(SideGenusOutOfRangeError):
        transvection(form, SeparatingCurve(side_genus=2))
    with pytest.raises(SideGenusOutOfRangeError):
        transvection(standard_form(1), SeparatingCurve(side_genus=1))


def test_curve_union_discriminates_on_kind():
    adapter = TypeAdapter(CurveClass)
    assert isinstance(adapter.validate_python({"kind": "separating", "side_genus": 1}), SeparatingCurve)
    parsed = adapter.validate_python({"kind": "nonseparating", "vector": [0, 1]})
    assert parsed == NonseparatingCurve(vector=(0, 1))
    assert not parsed.separating


def test_non_symplectic_rejected():
    with pytest.raises(NotSymplecticError):
        SymplecticMatrix(IntMatrix([[2, 0], [0, 1]]), 1)
    with pytest.raises(DimensionMismatchError):
        is_symplectic(IntMatrix.identity(3), 1)


def test_genus_mismatch():
    with pytest.raises(GenusMismatchError):
        SymplecticMatrix.identity(1) @ SymplecticMatrix.identity(2)


def test_conjugate(torus_twists):
    ta, tb = torus_twists
    # t_b t_a t_b^-1 is the twist about t_b(a)
    image = tb.matrix.apply((1, 0))
    expected = transvection(standard_form(1), NonseparatingCurve(vector=image))
    assert ta.conjugate(tb) == expected
