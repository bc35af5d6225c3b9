"""Layered tangle search over an enumeration ``s_1, ..., s_n``.

Layer ``i`` holds every F-tangle of ``{s_1, ..., s_i}``. The engine is a
depth-first walk of the binary orientation tree (forward orientation first);
collecting nodes by depth yields the same per-layer order a breadth-first
construction would.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .core import OrientedSep, Separation, Universe, is_antisymmetric, is_consistent, is_consistent_pair
from .errors import AlreadyOriented, DuplicateSeparation, InvalidSeed
from .forbidden import ForbiddenOracle

Tangle = frozenset  # of OrientedSep


@dataclass
class SearchResult:
    enumeration: list[Separation]
    layers: list[list[Tangle]]
    seed: Tangle = field(default_factory=frozenset)
    # index (1-based) of the first empty layer, if any
    stopped_at: int | None = None

    def maximal(self) -> list[Tangle]:
        return maximal_from_layers(self.layers, include_empty=not self.seed)

    def tangles(self) -> list[Tangle]:
        return [t for layer in self.layers for t in layer]


def _forbidden_subset_with(tau: Sequence[OrientedSep], x: OrientedSep, F: ForbiddenOracle) -> bool:
    m = F.max_member_size
    limit = len(tau) if m is None else min(len(tau), m - 1)
    for k in range(limit + 1):
        for sub in combinations(tau, k):
            if F.is_forbidden(sub + (x,)):
                return True
    return False


def can_add(tau: Iterable[OrientedSep], x: OrientedSep, F: ForbiddenOracle, u: Universe) -> bool:
    """Whether ``tau + {x}`` is still consistent and F-avoiding.

    Assumes ``tau`` itself is; only subsets of ``tau`` of size below the
    oracle's member bound are combined with ``x``. An unbounded oracle makes
    this exponential in ``len(tau)``.
    """
    tau = tuple(tau)
    if any(y.sep_id == x.sep_id for y in tau):
        raise AlreadyOriented(f"{x.sep_id!r} is already oriented")
    if not all(is_consistent_pair(y, x, u) for y in tau):
        return False
    return not _forbidden_subset_with(tau, x, F)


def _check_enumeration(S: Sequence[Separation]):
    ids = [s.sep_id for s in S]
    if len(set(ids)) != len(ids):
        raise DuplicateSeparation("enumeration lists a separation twice")


def _dfs(order: Sequence[Separation], fixed: dict, F: ForbiddenOracle, u: Universe) -> list[list[Tangle]]:
    layers: list[list[Tangle]] = [[] for _ in order]
    path: list[OrientedSep] = []

    def visit(i: int):
        if i == len(order):
            return
        s = order[i]
        choices = (fixed[s.sep_id],) if s.sep_id in fixed else s.orientations
        for x in choices:
            if can_add(path, x, F, u):
                path.append(x)
                layers[i].append(frozenset(path))
                visit(i + 1)
                path.pop()

    visit(0)
    return layers


def _first_empty(layers) -> int | None:
    for i, layer in enumerate(layers, start=1):
        if not layer:
            return i
    return None


def layered_search(S: Sequence[Separation], F: ForbiddenOracle, u: Universe,
                   stop_early: bool = True) -> SearchResult:
    """All F-tangles of every prefix of ``S``.

    Layers after the first empty one are necessarily empty; ``stop_early``
    only controls whether ``stopped_at`` is reported.
    """
    S = list(S)
    _check_enumeration(S)
    layers = _dfs(S, {}, F, u)
    return SearchResult(S, layers, stopped_at=_first_empty(layers) if stop_early else None)


def maximal_from_layers(layers: Sequence[Sequence[Tangle]], include_empty: bool = True) -> list[Tangle]:
    """The inclusion-maximal elements of the union of prefix-closed layers.

    A tangle of layer ``i`` is maximal iff no tangle of layer ``i + 1``
    contains it; the empty orientation counts as layer 0 when requested.
    """
    full = ([[frozenset()]] if include_empty else []) + [list(layer) for layer in layers]
    out = []
    for i, layer in enumerate(full):
        nxt = full[i + 1] if i + 1 < len(full) else []
        for tau in layer:
            if not any(tau < nu for nu in nxt):
                out.append(tau)
    return out


def maximal_tangles(S: Sequence[Separation], F: ForbiddenOracle, u: Universe) -> list[Tangle]:
    return layered_search(S, F, u).maximal()


def _violates(seed: Sequence[OrientedSep], F: ForbiddenOracle, u: Universe) -> bool:
    if not is_consistent(seed, u):
        return True
    m = F.max_member_size
    limit = len(seed) if m is None else min(len(seed), m)
    return any(F.is_forbidden(sub) for k in range(limit + 1) for sub in combinations(seed, k))


def seeded_search(S: Sequence[Separation], F: ForbiddenOracle, u: Universe,
                  seed: Iterable[OrientedSep]) -> SearchResult:
    """Layered search restricted to tangles containing ``seed``.

    The seed's separations are enumerated first with their orientations
    fixed, followed by the rest of ``S`` in order. Only tangles that contain
    the whole seed and whose separations form a prefix of the original
    enumeration are reported, placed at their original layer index.
    """
    S = list(S)
    _check_enumeration(S)
    seed = frozenset(seed)
    ids = {s.sep_id for s in S}
    if not is_antisymmetric(seed):
        raise InvalidSeed("seed contains both orientations of a separation")
    if any(x.sep_id not in ids for x in seed):
        raise InvalidSeed("seed orients a separation outside the enumeration")
    seed_seq = [x for s in S for x in seed if x.sep_id == s.sep_id]
    if _violates(seed_seq, F, u):
        raise InvalidSeed("seed is inconsistent or contains a forbidden set")

    fixed = {x.sep_id: x for x in seed}
    reordered = [s for s in S if s.sep_id in fixed] + [s for s in S if s.sep_id not in fixed]
    raw = _dfs(reordered, fixed, F, u)

    position = {s.sep_id: i for i, s in enumerate(S)}
    layers: list[list[Tangle]] = [[] for _ in S]
    # shallower nodes hold only part of the seed
    for depth, layer in enumerate(raw, start=1):
        if depth < len(seed):
            continue
        for tau in layer:
            top = max(position[x.sep_id] for x in tau)
            if top + 1 == depth:  # separations form an original prefix
                layers[top].append(tau)
    return SearchResult(S, layers, seed=seed)
