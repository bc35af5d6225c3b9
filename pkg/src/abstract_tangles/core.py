"""Vocabulary of abstract separation systems.

An oriented separation is a pair ``(sep_id, forward)``; flipping ``forward``
is the involution. Everything else (partial order, corners, order function)
is supplied by a :class:`Universe`.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from .errors import SameUnderlyingSeparation


@dataclass(frozen=True)
class OrientedSep:
    sep_id: Hashable
    forward: bool = True

    def inverse(self) -> OrientedSep:
        return OrientedSep(self.sep_id, not self.forward)

    @property
    def separation(self) -> Separation:
        return Separation(self.sep_id)

    def sort_key(self):
        # forward orientation first
        return (self.sep_id, not self.forward)


@dataclass(frozen=True)
class Separation:
    sep_id: Hashable

    @property
    def forward(self) -> OrientedSep:
        return OrientedSep(self.sep_id, True)

    @property
    def backward(self) -> OrientedSep:
        return OrientedSep(self.sep_id, False)

    @property
    def orientations(self) -> tuple[OrientedSep, OrientedSep]:
        return (self.forward, self.backward)


class Universe(abc.ABC):
    """Capability bundle: involution, order, lattice operations, order function.

    ``system`` is the distinguished finite separation system S inside the
    universe, in its enumeration order.
    """

    system: tuple[Separation, ...] = ()

    def inverse(self, x: OrientedSep) -> OrientedSep:
        return x.inverse()

    @abc.abstractmethod
    def leq(self, x: OrientedSep, y: OrientedSep) -> bool: ...

    @abc.abstractmethod
    def join(self, x: OrientedSep, y: OrientedSep) -> OrientedSep: ...

    @abc.abstractmethod
    def meet(self, x: OrientedSep, y: OrientedSep) -> OrientedSep: ...

    @abc.abstractmethod
    def order(self, x: OrientedSep | Separation) -> int: ...

    def in_S(self, x: OrientedSep | Separation) -> bool:
        return x.sep_id in self._system_ids

    @property
    def _system_ids(self) -> frozenset:
        return frozenset(s.sep_id for s in self.system)

    def sort_key(self, s: OrientedSep | Separation):
        """Deterministic key for separations; the default uses ``sep_id``."""
        return s.sep_id


def is_antisymmetric(P: Iterable[OrientedSep]) -> bool:
    seen = set()
    for x in P:
        if x.sep_id in seen:
            return False
        seen.add(x.sep_id)
    return True


def is_consistent_pair(x: OrientedSep, y: OrientedSep, u: Universe) -> bool:
    """False iff ``x`` and ``y`` point away from each other (``x* <= y``)."""
    if x.sep_id == y.sep_id:
        raise SameUnderlyingSeparation(f"{x} and {y} orient the same separation")
    return not u.leq(u.inverse(x), y)


def is_consistent(P: Iterable[OrientedSep], u: Universe) -> bool:
    for x, y in combinations(list(P), 2):
        if x.sep_id != y.sep_id and not is_consistent_pair(x, y, u):
            return False
    return True


def is_star(sigma: Iterable[OrientedSep], u: Universe) -> bool:
    sigma = list(sigma)
    if not is_antisymmetric(sigma):
        return False
    for x in sigma:
        for y in sigma:
            if x != y and not u.leq(x, u.inverse(y)):
                return False
    return True


def is_nested(s: Separation, t: Separation, u: Universe) -> bool:
    """Nested iff some orientations of ``s`` and ``t`` are comparable."""
    for x in s.orientations:
        for y in t.orientations:
            if u.leq(x, y):
                return True
    return False


def corners(s: Separation, t: Separation, u: Universe) -> tuple[OrientedSep, ...]:
    """The four corners ``s+ v t+``, ``s+ v t-``, ``s- v t+``, ``s- v t-``."""
    return tuple(u.join(x, y) for x in s.orientations for y in t.orientations)


def trivial_orientations(S: Iterable[Separation], u: Universe) -> set[OrientedSep]:
    S = list(S)
    found = set()
    for r in S:
        for x in r.orientations:
            for s in S:
                if s.sep_id == r.sep_id:
                    continue
                if u.leq(x, s.forward) and u.leq(x, s.backward):
                    found.add(x)
                    break
    return found
