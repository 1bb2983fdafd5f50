"""Residue arithmetic, units, automorphisms, affine maps."""

import pytest
from hypothesis import given, strategies as st

from cayleytones.modular import (
    AffineMap,
    Automorphism,
    ModElement,
    ModRing,
    ModulusMismatchError,
    add,
    automorphisms,
    compose,
    fixed_points,
    is_involution,
    mul,
    neg,
    negation,
    sub,
    units,
)

rings = st.integers(min_value=2, max_value=64).map(ModRing)


def test_ring_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        ModRing(1)
    with pytest.raises(ValueError):
        ModRing(0)


def test_values_reduce_into_range():
    r = ModRing(12)
    assert r.element(14).value == 2
    assert r.element(-1).value == 11
    assert r.element(24).value == 0


def test_add_example():
    r = ModRing(12)
    assert add(r.element(9), r.element(8)).value == 5


def test_neg_example():
    r = ModRing(12)
    assert neg(r.element(3)).value == 9
    assert neg(r.element(0)).value == 0


def test_sub_and_mul():
    r = ModRing(12)
    assert sub(r.element(3), r.element(8)).value == 7
    assert mul(r.element(9), r.element(8)).value == 0
    assert (r.element(9) * 8).value == 0
    assert (r.element(9) - 8).value == 1


def test_mismatched_rings_rejected():
    a = ModRing(12).element(3)
    b = ModRing(10).element(3)
    with pytest.raises(ModulusMismatchError):
        add(a, b)
    with pytest.raises(ModulusMismatchError):
        a * b


@given(rings, st.integers(), st.integers(), st.integers())
def test_group_axioms(ring, x, y, z):
    """Associativity, identity 0, inverses, commutativity of the sum."""
    a, b, c = ring.element(x), ring.element(y), ring.element(z)
    assert ((a + b) + c) == (a + (b + c))
    assert (a + ring.element(0)) == a
    assert (a + (-a)).value == 0
    assert (a + b) == (b + a)


def test_units_examples():
    assert units(ModRing(12)) == [1, 5, 7, 11]
    assert units(ModRing(10)) == [1, 3, 7, 9]
    assert units(ModRing(2)) == [1]
    assert len(units(ModRing(15))) == 8


@given(rings)
def test_units_closed_under_product_and_inverse(ring):
    U = set(units(ring))
    for a in U:
        assert any((a * b) % ring.n == 1 for b in U), "unit without inverse"
        for b in U:
            assert (a * b) % ring.n in U


def test_automorphism_counts():
    assert [f.multiplier for f in automorphisms(ModRing(12))] == [1, 5, 7, 11]
    assert len(automorphisms(ModRing(15))) == 8
    assert [f.multiplier for f in automorphisms(ModRing(2))] == [1]


@given(rings)
def test_automorphisms_are_bijective_morphisms(ring):
    n = ring.n
    for f in automorphisms(ring):
        image = [f(x) for x in range(n)]
        assert sorted(image) == list(range(n))
        for x in range(n):
            for y in range(0, n, max(1, n // 7)):
                assert f((x + y) % n) == (f(x) + f(y)) % n


def test_automorphism_rejects_non_unit():
    with pytest.raises(ValueError):
        Automorphism(ModRing(12), 4)
    with pytest.raises(ValueError):
        AffineMap(ModRing(12), 3, 1)


def test_affine_apply_examples():
    r = ModRing(12)
    T = AffineMap(r, 5, 2)
    assert T(0) == 2
    assert T(r.element(0)).value == 2
    T15 = AffineMap(ModRing(15), 14, 1)
    assert T15(8) == 8


def test_compose_example():
    r = ModRing(12)
    T = AffineMap(r, 5, 2)
    squared = compose(T, T)
    assert (squared.multiplier, squared.offset) == (1, 0)
    assert squared == AffineMap.identity(r)


def test_compose_is_function_composition():
    r = ModRing(15)
    T1 = AffineMap(r, 2, 3)
    T2 = AffineMap(r, 7, 11)
    both = compose(T1, T2)
    for x in range(15):
        assert both(x) == T1(T2(x))


def test_involution_examples():
    r = ModRing(12)
    assert is_involution(AffineMap(r, 5, 2))
    for w in range(12):
        assert is_involution(AffineMap(r, 11, w))
    assert not is_involution(AffineMap(r, 1, 3))


@pytest.mark.parametrize("n", range(2, 31))
def test_involution_law_matches_pointwise(n):
    """h^2 = 1 and (h+1)w = 0 against squaring the map, exhaustively."""
    ring = ModRing(n)
    for h in units(ring):
        for w in range(n):
            T = AffineMap(ring, h, w)
            pointwise = all(T(T(x)) == x for x in range(n))
            assert is_involution(T) == pointwise


@given(rings)
def test_negation_is_always_an_involution(ring):
    f = negation(ring)
    T = f.as_affine()
    assert is_involution(T)
    for x in range(ring.n):
        assert f(f(x)) == x


def test_fixed_points_examples():
    r = ModRing(12)
    assert fixed_points(AffineMap(r, 11, 10)) == frozenset({5, 11})
    pts = fixed_points(AffineMap(r, 7, 6))
    assert 3 in pts
    assert pts == frozenset({1, 3, 5, 7, 9, 11})
    assert fixed_points(AffineMap.identity(r)) == frozenset(range(12))


def test_fixed_point_z15_example():
    assert fixed_points(AffineMap(ModRing(15), 14, 1)) == frozenset({8})


def test_affine_normal_form():
    r = ModRing(12)
    T = AffineMap(r, 17, 14)
    assert (T.multiplier, T.offset) == (5, 2)


def test_element_repr_round_trip():
    e = ModRing(10).element(7)
    assert int(e) == 7
    assert "7" in repr(e)
