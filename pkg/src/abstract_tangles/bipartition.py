"""Bipartitions of a finite ground set, ordered by inclusion of left sides,
with the weighted edge cut of a graph as order function.

Left sides are stored as bitmasks (bit ``i`` is the ``i``-th ground element).
The ``sep_id`` of a bipartition is the mask of its canonical left side: of
``A`` and ``V - A``, the one whose sorted index tuple is lexicographically
smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import OrientedSep, Separation, Universe
from .errors import DuplicateSeparation, UnknownLabel


def mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class WeightedGraph:
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if not self.labels:
            raise ValueError("ground set must be nonempty")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("ground set labels must be unique")
        for a, b, w in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {self.labels[a]}")
            if w < 0:
                raise ValueError("edge weights must be nonnegative")

    @classmethod
    def from_labels(cls, labels: Sequence, edges: Iterable = ()) -> WeightedGraph:
        """Build from label lists; edges are ``(a, b)`` or ``(a, b, weight)``."""
        labels = tuple(str(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        out = []
        for e in edges:
            a, b, *rest = e
            w = int(rest[0]) if rest else 1
            try:
                out.append((index[str(a)], index[str(b)], w))
            except KeyError as exc:
                raise UnknownLabel(exc.args[0]) from None
        return cls(labels, tuple(out))

    @property
    def n(self) -> int:
        return len(self.labels)


class BipartitionUniverse(Universe):
    """All bipartitions ``(A, V - A)`` of ``graph``'s ground set.

    ``system`` lists the distinguished separations S in enumeration order.
    """

    def __init__(self, graph: WeightedGraph, system: Iterable[Separation] = ()):
        self.graph = graph
        self.n = graph.n
        self.full = (1 << self.n) - 1
        self._cut: dict[int, int] = {}
        self.system = tuple(system)
        self._ids = frozenset(s.sep_id for s in self.system)

    @property
    def _system_ids(self) -> frozenset:
        return self._ids

    def with_system(self, system: Iterable[Separation]) -> BipartitionUniverse:
        return BipartitionUniverse(self.graph, system)

    # --- encoding -------------------------------------------------------

    def canonical_mask(self, mask: int) -> int:
        other = self.full ^ mask
        return mask if mask_indices(mask) < mask_indices(other) else other

    def oriented(self, left: int) -> OrientedSep:
        canon = self.canonical_mask(left)
        return OrientedSep(canon, left == canon)

    def separation(self, left: int) -> Separation:
        return Separation(self.canonical_mask(left))

    def left(self, x: OrientedSep) -> int:
        return x.sep_id if x.forward else self.full ^ x.sep_id

    def mask_of(self, labels: Iterable) -> int:
        index = {lab: i for i, lab in enumerate(self.graph.labels)}
        mask = 0
        for lab in labels:
            try:
                mask |= 1 << index[str(lab)]
            except KeyError:
                raise UnknownLabel(str(lab)) from None
        return mask

    def labels_of(self, mask: int) -> list[str]:
        return [self.graph.labels[i] for i in mask_indices(mask)]

    def from_left(self, labels: Iterable) -> OrientedSep:
        return self.oriented(self.mask_of(labels))

    def describe(self, x: OrientedSep) -> str:
        left = self.left(x)
        a = ",".join(self.labels_of(left))
        b = ",".join(self.labels_of(self.full ^ left))
        return f"({{{a}}},{{{b}}})"

    # --- universe operations --------------------------------------------

    def leq(self, x: OrientedSep, y: OrientedSep) -> bool:
        return self.left(x) & ~self.left(y) == 0

    def join(self, x: OrientedSep, y: OrientedSep) -> OrientedSep:
        return self.oriented(self.left(x) | self.left(y))

    def meet(self, x: OrientedSep, y: OrientedSep) -> OrientedSep:
        return self.oriented(self.left(x) & self.left(y))

    def order(self, x: OrientedSep | Separation) -> int:
        mask = x.sep_id
        cut = self._cut.get(mask)
        if cut is None:
            cut = 0
            for a, b, w in self.graph.edges:
                if ((mask >> a) & 1) != ((mask >> b) & 1):
                    cut += w
            self._cut[mask] = cut
        return cut

    def sort_key(self, s: OrientedSep | Separation):
        return mask_indices(s.sep_id)

    def all_separations(self, proper: bool = False) -> list[Separation]:
        """Every bipartition class of the ground set, canonically sorted.

        With ``proper`` the class ``{}|V`` is left out.
        """
        seps = {self.canonical_mask(m) for m in range(self.full + 1)}
        if proper:
            seps.discard(0)
        return sorted((Separation(m) for m in seps), key=self.sort_key)

    def by_order(self, seps: Iterable[Separation]) -> list[Separation]:
        return sorted(seps, key=lambda s: (self.order(s), self.sort_key(s)))


def build_universe(graph: WeightedGraph, lefts: Iterable[Iterable],
                   allow_trivial: bool = True) -> BipartitionUniverse:
    """Universe of all bipartitions of ``graph`` with S given by left sides."""
    u = BipartitionUniverse(graph)
    system = []
    seen = set()
    for left in lefts:
        mask = u.mask_of(left)
        if not allow_trivial and mask in (0, u.full):
            raise ValueError("left sides must be nonempty proper subsets")
        s = u.separation(mask)
        if s.sep_id in seen:
            raise DuplicateSeparation(u.describe(s.forward))
        seen.add(s.sep_id)
        system.append(s)
    return u.with_system(system)

