"""Random desk-scale instances for property tests and sweeps."""

from __future__ import annotations

import random
from itertools import combinations, product

from .bipartition import BipartitionUniverse, WeightedGraph
from .core import Separation, is_star
from .forbidden import CoverOracle, ExplicitF


def random_graph(rng: random.Random, n: int, p_edge: float = 0.6, max_weight: int = 2) -> WeightedGraph:
    edges = [(a, b, rng.randint(1, max_weight)) for a, b in combinations(range(n), 2) if rng.random() < p_edge]
    return WeightedGraph(tuple(str(i) for i in range(n)), tuple(edges))


def graph_from_edges(n: int, edges) -> WeightedGraph:
    return WeightedGraph(tuple(str(i) for i in range(n)), tuple((a, b, 1) for a, b in edges))


def all_proper_by_order(graph: WeightedGraph) -> BipartitionUniverse:
    """Universe whose S is every proper bipartition, sorted by order then canonically."""
    u = BipartitionUniverse(graph)
    return u.with_system(u.by_order(u.all_separations(proper=True)))


def random_cover_instance(rng: random.Random, max_n: int = 4, max_seps: int = 7, m: int = 3,
                          sort: bool = True):
    """Random graph, random S (sorted by order unless ``sort`` is off), cover oracle."""
    n = rng.randint(2, max_n)
    u = BipartitionUniverse(random_graph(rng, n))
    pool = u.all_separations(proper=True)
    S = rng.sample(pool, rng.randint(1, min(max_seps, len(pool))))
    u = u.with_system(u.by_order(S) if sort else S)
    return u, CoverOracle(u, m)


def stars_of(S: list[Separation], u, max_size: int = 3) -> list[frozenset]:
    out = []
    for k in range(1, max_size + 1):
        for seps in combinations(S, k):
            for bits in product((0, 1), repeat=k):
                sigma = frozenset(s.backward if b else s.forward for s, b in zip(seps, bits))
                if is_star(sigma, u):
                    out.append(sigma)
    return out


def random_star_instance(rng: random.Random, max_n: int = 4, max_seps: int = 4, max_F: int = 12):
    n = rng.randint(2, max_n)
    u = BipartitionUniverse(random_graph(rng, n))
    pool = u.all_separations(proper=True)
    S = rng.sample(pool, rng.randint(1, min(max_seps, len(pool))))
    u = u.with_system(S)
    stars = stars_of(S, u)
    F = ExplicitF(rng.sample(stars, min(len(stars), rng.randint(0, max_F))))
    return u, F
