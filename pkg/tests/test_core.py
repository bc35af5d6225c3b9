import pytest
from hypothesis import given, settings, strategies as st

from abstract_tangles.bipartition import BipartitionUniverse, WeightedGraph
from abstract_tangles.core import (
    OrientedSep,
    Separation,
    corners,
    is_antisymmetric,
    is_consistent,
    is_consistent_pair,
    is_nested,
    is_star,
    trivial_orientations,
)
from abstract_tangles.errors import SameUnderlyingSeparation

from conftest import by_left, one


def test_involution():
    x = OrientedSep(7, True)
    assert x.inverse().inverse() == x
    assert x.inverse().sep_id == x.sep_id
    assert x.inverse().forward != x.forward
    assert x.inverse() != x


@pytest.mark.parametrize("x, y, expected", [
    ([1, 2], [0, 2], False),
    ([1, 2], [1], True),
    ([0], [0, 2], True),
])
def test_consistent_pair_k3(k3, x, y, expected):
    u = k3.universe
    assert is_consistent_pair(one(u, x), one(u, y), u) is expected
    assert is_consistent_pair(one(u, y), one(u, x), u) is expected


def test_consistent_pair_same_separation(k3):
    u = k3.universe
    x = one(u, [0])
    with pytest.raises(SameUnderlyingSeparation):
        is_consistent_pair(x, x.inverse(), u)


def test_is_consistent(k3):
    u = k3.universe
    assert is_consistent([], u)
    assert not is_consistent(by_left(u, [1, 2], [0, 2]), u)
    assert is_consistent(by_left(u, [1, 2], [1], [2]), u)


def test_is_star(k3):
    u = k3.universe
    assert is_star([], u)
    assert is_star(by_left(u, [1, 2]), u)
    assert is_star(by_left(u, [0], [1]), u)
    assert not is_star(by_left(u, [1, 2], [0, 2]), u)
    x = one(u, [0])
    assert not is_star([x, x.inverse()], u)


def test_is_nested(k3, c4):
    u = c4.universe
    u0, w0 = c4.S
    assert is_nested(u0, u0, u)
    assert not is_nested(u0, w0, u)
    k = k3.universe
    s1, s2, _ = k3.S
    assert is_nested(s1, s2, k)


def test_corners(c4):
    u = c4.universe
    u0, w0 = c4.S
    assert u.join(one(u, [0, 1]), one(u, [1, 2])) == one(u, [0, 1, 2])
    assert all(u.order(c) == 2 for c in corners(u0, w0, u))
    full = u.oriented(u.full)
    assert full in corners(u0, u0, u)


def test_trivial_orientations(k3):
    u = k3.universe
    assert trivial_orientations(k3.S[:1], u) == set()
    assert trivial_orientations(k3.S, u) == set()
    e = u.separation(0)
    assert trivial_orientations(k3.S + [e], u) == {u.oriented(0)}


# --- algebraic properties on random bipartitions -------------------------------

@st.composite
def universes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    weights = draw(st.lists(st.integers(0, 3), min_size=len(pairs), max_size=len(pairs)))
    edges = tuple((a, b, w) for (a, b), w in zip(pairs, weights) if w)
    return BipartitionUniverse(WeightedGraph(tuple(map(str, range(n))), edges))


@st.composite
def universe_and_seps(draw, k=2):
    u = draw(universes())
    masks = draw(st.lists(st.integers(0, u.full), min_size=k, max_size=k))
    return (u, *[u.oriented(m) for m in masks])


@settings(max_examples=200, deadline=None)
@given(universe_and_seps())
def test_lattice_laws(data):
    u, x, y = data
    inv = u.inverse
    assert u.leq(x, y) == u.leq(inv(y), inv(x))
    assert inv(u.join(x, y)) == u.meet(inv(x), inv(y))
    assert u.join(x, y) == u.join(y, x) and u.meet(x, y) == u.meet(y, x)
    assert u.join(x, x) == x and u.meet(x, x) == x
    assert u.leq(x, u.join(x, y)) and u.leq(u.meet(x, y), x)
    assert u.order(x) == u.order(inv(x)) >= 0
    assert u.order(u.join(x, y)) + u.order(u.meet(x, y)) <= u.order(x) + u.order(y)


@settings(max_examples=200, deadline=None)
@given(universe_and_seps(k=3))
def test_associativity(data):
    u, x, y, z = data
    assert u.join(u.join(x, y), z) == u.join(x, u.join(y, z))
    assert u.meet(u.meet(x, y), z) == u.meet(x, u.meet(y, z))


@settings(max_examples=300, deadline=None)
@given(universe_and_seps(k=3))
def test_fish_lemma(data):
    u, a, b, c = data
    s, t, r = a.separation, b.separation, c.separation
    if is_nested(s, t, u) or not (is_nested(r, s, u) and is_nested(r, t, u)):
        return
    for corner in corners(s, t, u):
        assert is_nested(r, corner.separation, u)


@settings(max_examples=200, deadline=None)
@given(universe_and_seps(k=3))
def test_stars_are_antisymmetric(data):
    u, *xs = data
    if is_star(xs, u):
        assert is_antisymmetric(xs)


def test_separation_orientations():
    s = Separation(3)
    assert s.forward.inverse() == s.backward
    assert s.orientations == (OrientedSep(3, True), OrientedSep(3, False))
