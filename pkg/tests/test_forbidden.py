import random

import pytest

from abstract_tangles.bipartition import BipartitionUniverse
from abstract_tangles.errors import NonAntisymmetricQuery
from abstract_tangles.forbidden import CoverOracle, ExplicitF, is_standard, stars_only
from abstract_tangles.generators import random_graph

from conftest import by_left, one


def test_cover_examples(k3):
    u, F = k3.universe, k3.F
    assert F.is_forbidden(by_left(u, [0], [1], [2]))
    assert not F.is_forbidden(by_left(u, [0], [1]))
    assert F.is_forbidden(by_left(u, [1, 2], [0, 2]))


def test_cover_size_bound(k3):
    u = k3.universe
    sigma = by_left(u, [0], [1], [2])
    assert not CoverOracle(u, 2).is_forbidden(sigma)
    assert CoverOracle(u, 3).is_forbidden(sigma)


def test_cover_never_forbids_empty():
    rng = random.Random(3)
    for _ in range(20):
        u = BipartitionUniverse(random_graph(rng, rng.randint(1, 5)))
        assert not CoverOracle(u).is_forbidden([])


def test_cover_pure_and_order_insensitive(k3):
    u, F = k3.universe, k3.F
    sigma = by_left(u, [1, 2], [0, 2])
    assert F.is_forbidden(sigma) == F.is_forbidden(list(reversed(sigma))) == F.is_forbidden(sigma + sigma)


def test_non_antisymmetric_query(k3):
    x = one(k3.universe, [0])
    with pytest.raises(NonAntisymmetricQuery):
        k3.F.is_forbidden([x, x.inverse()])
    with pytest.raises(NonAntisymmetricQuery):
        ExplicitF([[x, x.inverse()]])


def test_explicit_membership(k3):
    u = k3.universe
    a, b = by_left(u, [0], [1])
    F = ExplicitF([[a], [a, b], [a]])
    assert len(F) == 2
    assert F.max_member_size == 2
    assert [a] in F and [b, a] in F and [b] not in F
    assert F.is_forbidden({a}) and not F.is_forbidden(set())
    assert ExplicitF().max_member_size == 0


def test_stars_only_examples(k3):
    u = k3.universe
    assert stars_only(ExplicitF(), u)
    assert stars_only(ExplicitF([by_left(u, [0], [1])]), u)
    assert not stars_only(ExplicitF([by_left(u, [1, 2], [0, 2])]), u)


def test_is_standard_examples(k3):
    u = k3.universe
    assert is_standard(ExplicitF([by_left(u, [0])]), k3.S, u)
    S = k3.S + [u.separation(0)]
    assert is_standard(ExplicitF([[u.oriented(u.full)]]), S, u)
    assert not is_standard(ExplicitF(), S, u)
