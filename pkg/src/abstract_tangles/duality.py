"""Tangle-tree duality by iterated forcing.

A star ``sigma`` in F with all elements but ``r*`` already forced forces
``r``. Forcings are recorded as ``(r, sigma)`` in ``M``. If both
orientations of some separation get forced, the trace is unwound into an
S-tree over F; otherwise the forced list is returned and can seed the
layered search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .core import OrientedSep, Separation, Universe, is_consistent
from .errors import InvariantViolation, MissingTraceEntry, NotAStarSystem
from .forbidden import ExplicitF, stars_only


@dataclass
class ForcedList:
    L: list[OrientedSep] = field(default_factory=list)
    M: list[tuple[OrientedSep, frozenset]] = field(default_factory=list)

    def __contains__(self, x) -> bool:
        return x in self._members()

    def _members(self) -> set:
        return set(self.L)

    def star_for(self, x: OrientedSep) -> frozenset:
        for r, sigma in self.M:
            if r == x:
                return sigma
        raise MissingTraceEntry(f"no trace entry for {x}")

    def add(self, x: OrientedSep, sigma: frozenset):
        if x in self.L:
            raise InvariantViolation(f"{x} forced twice")
        self.L.append(x)
        self.M.append((x, sigma))


@dataclass
class STree:
    """A tree whose nodes carry stars and whose edges carry oriented separations.

    ``edges`` holds ``(u, v, x)`` with ``x`` the orientation pointing towards
    ``v``; the reverse direction carries ``x*``.
    """

    stars: list[frozenset] = field(default_factory=list)
    edges: list[tuple[int, int, OrientedSep]] = field(default_factory=list)

    def add_node(self, star: frozenset) -> int:
        self.stars.append(frozenset(star))
        return len(self.stars) - 1

    def add_edge(self, u: int, v: int, towards_v: OrientedSep):
        self.edges.append((u, v, towards_v))

    def incoming(self, v: int) -> list[OrientedSep]:
        out = []
        for a, b, x in self.edges:
            if b == v:
                out.append(x)
            elif a == v:
                out.append(x.inverse())
        return out


@dataclass
class DualityResult:
    forced: ForcedList
    tree: STree | None = None
    clash: Separation | None = None
    warnings: list[str] = field(default_factory=list)
    passes: int = 0


def forcing_pass(state: ForcedList, F: ExplicitF, u: Universe):
    """One scan over F; returns ``(added, clash)``.

    Forcings take effect immediately. The scan stops at the first clash.
    """
    added = []
    for sigma in F.members:
        in_L = state._members()
        for y in sorted(sigma, key=OrientedSep.sort_key):
            x = u.inverse(y)
            if x in in_L:
                continue
            if all(z in in_L for z in sigma if z != y):
                state.add(x, sigma)
                added.append(x)
                if y in in_L:
                    return added, x.separation
                break
    return added, None


def build_stree(state: ForcedList, clash: Separation, u: Universe) -> STree:
    """Unwind the forcing trace of a clash on ``clash`` into an S-tree."""
    fwd, bwd = clash.forward, clash.backward
    if fwd not in state or bwd not in state:
        raise MissingTraceEntry(f"clash separation {clash} is not forced both ways")
    tree = STree()
    a = tree.add_node(state.star_for(fwd))
    b = tree.add_node(state.star_for(bwd))
    # fwd points towards the star that forced bwd
    tree.add_edge(a, b, fwd)
    position = {x: i for i, x in enumerate(state.L)}
    queue = deque([(a, fwd), (b, bwd)])
    while queue:
        node, r = queue.popleft()
        for t in sorted(state.star_for(r), key=OrientedSep.sort_key):
            if t == u.inverse(r):
                continue
            if t not in position or position[t] >= position[r]:
                raise MissingTraceEntry(f"{t} was not forced before {r}")
            child = tree.add_node(state.star_for(t))
            tree.add_edge(child, node, t)
            queue.append((child, t))
    return tree


def run_duality(F: ExplicitF, S: Sequence[Separation], u: Universe) -> DualityResult:
    if not stars_only(F, u):
        raise NotAStarSystem("every member of F must be a star")
    state = ForcedList()
    passes = 0
    while True:
        passes += 1
        added, clash = forcing_pass(state, F, u)
        if clash is not None:
            tree = build_stree(state, clash, u)
            return DualityResult(state, tree=tree, clash=clash, passes=passes)
        if not added:
            break
    result = DualityResult(state, passes=passes)
    if not is_consistent(state.L, u):
        result.warnings.append("forced list is inconsistent; duality hypotheses may be unmet")
    forced = set(state.L)
    if any(m <= forced for m in F.members):
        result.warnings.append("forced list contains a member of F; duality hypotheses may be unmet")
    return result


def validate_stree(tree: STree, F: ExplicitF, S: Sequence[Separation], u: Universe) -> bool:
    n = len(tree.stars)
    if n == 0 or len(tree.edges) != n - 1:
        return False
    ids = {s.sep_id for s in S}
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b, x in tree.edges:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            return False
        if x.sep_id not in ids:
            return False
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        return False
    for v in range(n):
        inc = tree.incoming(v)
        if len(set(inc)) != len(inc) or frozenset(inc) != tree.stars[v]:
            return False
        if tree.stars[v] not in F:
            return False
    return True
