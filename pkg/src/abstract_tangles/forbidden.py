"""Forbidden-set oracles.

An oracle answers ``is_forbidden(sigma)`` for antisymmetric sets of oriented
separations and advertises ``max_member_size`` (``None`` for unbounded). Two
kinds are provided: an explicit member list and the cover oracle, which
forbids every set of at most ``m`` bipartitions whose left sides cover the
ground set.
"""

from __future__ import annotations

from typing import Iterable, Protocol

from .bipartition import BipartitionUniverse
from .core import OrientedSep, Separation, Universe, is_antisymmetric, is_star, trivial_orientations
from .errors import NonAntisymmetricQuery


class ForbiddenOracle(Protocol):
    max_member_size: int | None

    def is_forbidden(self, sigma: Iterable[OrientedSep]) -> bool: ...


def _as_query(sigma) -> frozenset:
    sigma = frozenset(sigma)
    if not is_antisymmetric(sigma):
        raise NonAntisymmetricQuery(f"query contains both orientations of a separation: {sorted(sigma, key=OrientedSep.sort_key)}")
    return sigma


class ExplicitF:
    """F given as a list of member sets; list order is kept for the duality scan.

    Repeated members are dropped (first occurrence wins).
    """

    def __init__(self, members: Iterable[Iterable[OrientedSep]] = ()):
        self.members: list[frozenset] = []
        self._lookup: set[frozenset] = set()
        for m in members:
            m = frozenset(m)
            if not is_antisymmetric(m):
                raise NonAntisymmetricQuery(f"member {sorted(m, key=OrientedSep.sort_key)} is not antisymmetric")
            if m not in self._lookup:
                self._lookup.add(m)
                self.members.append(m)
        self.max_member_size = max((len(m) for m in self.members), default=0)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, sigma) -> bool:
        return frozenset(sigma) in self._lookup

    def is_forbidden(self, sigma) -> bool:
        return _as_query(sigma) in self._lookup


class CoverOracle:
    """Forbids sets of at most ``max_member_size`` bipartitions whose left sides cover V."""

    def __init__(self, universe: BipartitionUniverse, max_member_size: int = 3):
        self.universe = universe
        self.max_member_size = max_member_size

    def is_forbidden(self, sigma) -> bool:
        sigma = _as_query(sigma)
        if len(sigma) > self.max_member_size:
            return False
        covered = 0
        for x in sigma:
            covered |= self.universe.left(x)
        return covered == self.universe.full


def stars_only(F: ExplicitF, u: Universe) -> bool:
    return all(is_star(m, u) for m in F.members)


def is_standard(F: ExplicitF, S: Iterable[Separation], u: Universe) -> bool:
    """F contains ``{r*}`` for every trivial ``r`` in S."""
    return all(frozenset([u.inverse(r)]) in F for r in trivial_orientations(S, u))
