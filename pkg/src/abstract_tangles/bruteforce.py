"""Exhaustive oracles for desk-scale verification.

Every orientation of a list of ``k`` separations is encoded as a ``k``-bit
integer (bit set = backward orientation); all ``2**k`` of them are filtered
at once with numpy masks against the definitions of consistency and
F-avoidance. Nothing here shares code paths with the search engine beyond
the universe primitives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .bipartition import BipartitionUniverse
from .core import OrientedSep, Separation, Universe
from .errors import CapExceeded

MAX_SEPARATIONS = 16
MAX_GROUND_SET = 5


def _orientation(s: Separation, bit: int) -> OrientedSep:
    return s.backward if bit else s.forward


def _valid_orientations(seps: Sequence[Separation], F, u: Universe) -> np.ndarray:
    """Codes of all consistent F-avoiding orientations of ``seps``."""
    k = len(seps)
    codes = np.arange(1 << k, dtype=np.int64)
    bits = [(codes >> i) & 1 for i in range(k)]
    keep = np.ones(1 << k, dtype=bool)

    for i, j in combinations(range(k), 2):
        for bi, bj in product((0, 1), repeat=2):
            x, y = _orientation(seps[i], bi), _orientation(seps[j], bj)
            if u.leq(u.inverse(x), y) or u.leq(u.inverse(y), x):
                keep &= ~((bits[i] == bi) & (bits[j] == bj))

    m = F.max_member_size
    limit = k if m is None else min(k, m)
    for size in range(limit + 1):
        for idx in combinations(range(k), size):
            for choice in product((0, 1), repeat=size):
                sigma = [_orientation(seps[i], b) for i, b in zip(idx, choice)]
                if F.is_forbidden(sigma):
                    hit = np.ones(1 << k, dtype=bool)
                    for i, b in zip(idx, choice):
                        hit &= bits[i] == b
                    keep &= ~hit
    return codes[keep]


def _decode(seps: Sequence[Separation], code: int) -> frozenset:
    return frozenset(_orientation(s, (code >> i) & 1) for i, s in enumerate(seps))


def all_tangles_of(seps: Sequence[Separation], F, u: Universe, cap: int = MAX_SEPARATIONS) -> list[frozenset]:
    """Every consistent F-avoiding orientation of exactly ``seps``."""
    seps = list(seps)
    if len(seps) > cap:
        raise CapExceeded(f"{len(seps)} separations exceed the cap of {cap}")
    return [_decode(seps, int(c)) for c in _valid_orientations(seps, F, u)]


def brute_tangles(S: Sequence[Separation], F, u: Universe, cap: int = MAX_SEPARATIONS) -> list[list[frozenset]]:
    """Layers ``T_1 .. T_n`` by full enumeration of each prefix."""
    S = list(S)
    if len(S) > cap:
        raise CapExceeded(f"{len(S)} separations exceed the cap of {cap}")
    return [all_tangles_of(S[:i], F, u, cap) for i in range(1, len(S) + 1)]


def brute_maximal(S: Sequence[Separation], F, u: Universe, cap: int = MAX_SEPARATIONS) -> list[frozenset]:
    """Inclusion-maximal tangles over all prefixes, by pairwise comparison."""
    pool = [frozenset()] + [t for layer in brute_tangles(S, F, u, cap) for t in layer]
    return [t for t in pool if not any(t < o for o in pool)]


def brute_universe_tangles(u: BipartitionUniverse, F, p: int, cap: int = MAX_GROUND_SET) -> list[frozenset]:
    """All F-tangles of the bipartitions of order at most ``p``."""
    if u.n > cap:
        raise CapExceeded(f"ground set of size {u.n} exceeds the cap of {cap}")
    seps = [s for s in u.all_separations() if u.order(s) <= p]
    return all_tangles_of(seps, F, u, cap=1 << (cap - 1))


def is_real(tangle, u: BipartitionUniverse, F, p: int | None = None) -> bool:
    """Whether ``tangle`` lies inside some F-tangle of the universe up to order ``p``.

    ``p`` defaults to the largest order occurring in ``tangle``.
    """
    tangle = frozenset(tangle)
    if p is None:
        p = max((u.order(x) for x in tangle), default=0)
    return any(tangle <= big for big in brute_universe_tangles(u, F, p))


@dataclass
class DualityVerdict:
    ok: bool
    kind: str
    brute_count: int
    problems: list[str] = field(default_factory=list)


def verify_duality(F, S: Sequence[Separation], u: Universe) -> DualityVerdict:
    """Cross-check ``run_duality`` against full enumeration of F-tangles of S."""
    from .duality import run_duality, validate_stree

    result = run_duality(F, S, u)
    S = list(S)
    tangles = all_tangles_of(S, F, u)
    problems = []
    if result.tree is not None:
        kind = "stree"
        if not validate_stree(result.tree, F, S, u):
            problems.append("emitted tree fails validation")
        if tangles:
            problems.append(f"tree emitted but {len(tangles)} F-tangles exist")
    else:
        kind = "forced"
        forced = frozenset(result.forced.L)
        for t in tangles:
            if not forced <= t:
                problems.append("forced list is not contained in every F-tangle")
                break
    return DualityVerdict(not problems, kind, len(tangles), problems)
