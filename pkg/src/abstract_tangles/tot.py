"""Tree of tangles by corner replacement.

Starting from maximal tangles in S and one distinguishing separation per
pair, crossing distinguishers are repeatedly replaced by corners (or by each
other) until the set ``N`` of distinguishers is nested. Tangles are extended
by the replacement separations along the way; a tangle that cannot be
extended as the crossing argument requires is fake and is dropped.

Pairs are kept in a fixed enumeration. Its first position whose
distinguisher crosses an earlier one is the pair worked on in a step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .core import OrientedSep, Separation, Universe, is_consistent_pair, is_nested
from .errors import (
    InvalidReplacement,
    InvariantViolation,
    NoDistinguisher,
    NotCrossing,
    NotDistinguishing,
    StepBudgetExceeded,
    UnknownTangle,
)
from .forbidden import ForbiddenOracle

log = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10_000


@dataclass(frozen=True)
class ExtendedTangle:
    """A tangle in S (``base``) together with separations of U outside S."""

    base: frozenset = frozenset()
    extension: frozenset = frozenset()
    max_base_order: int = 0

    @classmethod
    def from_tangle(cls, tangle: Iterable[OrientedSep], u: Universe) -> ExtendedTangle:
        tangle = frozenset(tangle)
        base = frozenset(x for x in tangle if u.in_S(x))
        return cls(base, tangle - base, max((u.order(x) for x in base), default=0))

    @property
    def elements(self) -> frozenset:
        return self.base | self.extension

    def __len__(self):
        return len(self.base) + len(self.extension)

    def __contains__(self, x) -> bool:
        return x in self.base or x in self.extension

    def orientation_of(self, s: Separation) -> OrientedSep | None:
        for x in s.orientations:
            if x in self:
                return x
        return None

    def add(self, x: OrientedSep, u: Universe) -> ExtendedTangle:
        if x in self:
            return self
        if u.in_S(x):
            return ExtendedTangle(self.base | {x}, self.extension, max(self.max_base_order, u.order(x)))
        return ExtendedTangle(self.base, self.extension | {x}, self.max_base_order)


def can_extend(tau: ExtendedTangle, x: OrientedSep, F: ForbiddenOracle, u: Universe) -> bool:
    if x in tau:
        return True
    if u.inverse(x) in tau:
        return False
    if u.order(x) > tau.max_base_order:
        return False
    elements = sorted(tau.elements, key=OrientedSep.sort_key)
    if not all(is_consistent_pair(y, x, u) for y in elements):
        return False
    m = F.max_member_size
    limit = len(elements) if m is None else min(len(elements), m - 1)
    for k in range(limit + 1):
        for sub in combinations(elements, k):
            if F.is_forbidden(sub + (x,)):
                return False
    return True


def distinguishes(s: Separation, a: ExtendedTangle, b: ExtendedTangle) -> bool:
    x = a.orientation_of(s)
    return x is not None and x.inverse() in b


def find_distinguisher(tau: ExtendedTangle, rho: ExtendedTangle, u: Universe) -> Separation:
    """Minimum-order separation oriented oppositely by the two tangles."""
    cands = [x.separation for x in tau.elements if x.inverse() in rho]
    if not cands:
        raise NoDistinguisher("tangles are not distinguished by any separation")
    return min(cands, key=lambda s: (u.order(s), u.sort_key(s)))


@dataclass(frozen=True)
class Outcome:
    """Result of the crossing lemma.

    ``replace_s``: the s-pair's distinguisher becomes ``into``'s separation,
    with ``into`` added to ``tau`` and its inverse to ``rho``.
    ``replace_t``: likewise for the t-pair, ``into`` going to ``phi``.
    ``fake``: ``role`` (one of tau, rho, phi, psi) is a fake tangle.
    """

    kind: str
    into: OrientedSep | None = None
    role: str | None = None

    @classmethod
    def fake(cls, role):
        return cls("fake", role=role)


_SWAP_KIND = {"replace_s": "replace_t", "replace_t": "replace_s", "fake": "fake"}
_SWAP_ROLE = {"tau": "phi", "rho": "psi", "phi": "tau", "psi": "rho", None: None}


def _lemma(s_tau: OrientedSep, tau, rho, t_phi: OrientedSep, phi, psi, F, u: Universe) -> Outcome:
    """Crossing lemma with ``order(s) <= order(t)``.

    ``s_tau`` is the orientation of s in tau, ``t_phi`` that of t in phi.
    """
    order_s, order_t = u.order(s_tau), u.order(t_phi)
    inv = u.inverse

    # (a) s itself can replace t
    for x in (s_tau, inv(s_tau)):
        if can_extend(phi, x, F, u) and can_extend(psi, inv(x), F, u):
            return Outcome("replace_t", into=x)

    # (b) a tangle of the t-pair orients s in neither way
    for role, tg in (("phi", phi), ("psi", psi)):
        if not can_extend(tg, s_tau, F, u) and not can_extend(tg, inv(s_tau), F, u):
            return Outcome.fake(role)

    # (c) a single orientation x of s fits both phi and psi
    x = s_tau if can_extend(phi, s_tau, F, u) else inv(s_tau)
    if not (can_extend(phi, x, F, u) and can_extend(psi, x, F, u)):
        raise InvariantViolation("no common orientation of s for phi and psi")
    c1 = u.join(x, t_phi)
    if u.order(c1) <= order_t:
        if not can_extend(phi, c1, F, u):
            return Outcome.fake("phi")
        if not can_extend(psi, inv(c1), F, u):
            return Outcome.fake("psi")
        return Outcome("replace_t", into=c1)
    c2 = u.join(x, inv(t_phi))
    if u.order(c2) <= order_t:
        if not can_extend(psi, c2, F, u):
            return Outcome.fake("psi")
        if not can_extend(phi, inv(c2), F, u):
            return Outcome.fake("phi")
        return Outcome("replace_t", into=inv(c2))

    # (d) the opposite corners are strictly smaller than s
    d1, d2 = u.join(inv(x), t_phi), u.join(inv(x), inv(t_phi))
    if not (u.order(d1) < order_s and u.order(d2) < order_s):
        raise InvariantViolation("order function is not submodular on this crossing")
    if inv(x) == s_tau:
        holder, holder_role, other, other_role = tau, "tau", rho, "rho"
    else:
        holder, holder_role, other, other_role = rho, "rho", tau, "tau"
    for d in (d1, d2):
        if can_extend(holder, d, F, u):
            break
    else:
        return Outcome.fake(holder_role)
    if not can_extend(other, inv(d), F, u):
        return Outcome.fake(other_role)
    return Outcome("replace_s", into=d if holder_role == "tau" else inv(d))


def classify_cross(s: Separation, s_pair: tuple, t: Separation, t_pair: tuple,
                   F: ForbiddenOracle, u: Universe) -> Outcome:
    """Decide which of the crossing lemma's outcomes applies.

    ``s_pair = (tau, rho)`` is distinguished by ``s`` and ``t_pair = (phi,
    psi)`` by ``t``. The smaller-order separation plays the role of s; on a
    tie the given roles are kept.
    """
    if is_nested(s, t, u):
        raise NotCrossing(f"{s} and {t} are nested")
    tau, rho = s_pair
    phi, psi = t_pair
    if not distinguishes(s, tau, rho):
        raise NotDistinguishing(f"{s} does not distinguish its pair")
    if not distinguishes(t, phi, psi):
        raise NotDistinguishing(f"{t} does not distinguish its pair")
    s_tau = tau.orientation_of(s)
    t_phi = phi.orientation_of(t)
    if u.order(t) < u.order(s):
        out = _lemma(t_phi, phi, psi, s_tau, tau, rho, F, u)
        return Outcome(_SWAP_KIND[out.kind], out.into, _SWAP_ROLE[out.role])
    return _lemma(s_tau, tau, rho, t_phi, phi, psi, F, u)


@dataclass
class PairEntry:
    a: int
    b: int
    dist: Separation
    # order ceiling inherited from the input pair this entry descends from
    bound: int
    origin: int | None = None


@dataclass
class Event:
    step: int
    kind: str  # "replace", "fake"
    pair: int | None = None
    old: Separation | None = None
    new: Separation | None = None
    partner: Separation | None = None
    split: bool = False
    tangle: int | None = None
    removed: frozenset | None = None
    nested_before: tuple = ()


def quasi_key(tangles: Iterable) -> list[int]:
    """Counts of tangles with ``p`` elements for ``p = 0, 1, ...``."""
    sizes = [len(t) for t in tangles]
    key = [0] * (max(sizes, default=-1) + 1)
    for n in sizes:
        key[n] += 1
    return key


def key_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Lexicographic ``a <= b`` after padding with zeros."""
    n = max(len(a), len(b))
    return list(a) + [0] * (n - len(a)) <= list(b) + [0] * (n - len(b))


class ToTState:
    def __init__(self, tangles: Sequence[ExtendedTangle], pairs: Sequence[tuple[int, int, Separation]],
                 u: Universe):
        self.u = u
        self.tangles: dict[int, ExtendedTangle] = dict(enumerate(tangles))
        self.next_id = len(tangles)
        self.pairs: list[PairEntry] = [
            PairEntry(a, b, s, u.order(s), origin=i) for i, (a, b, s) in enumerate(pairs)
        ]
        self.step = 0
        self.split_count = 0
        self.events: list[Event] = []
        self.fakes: list[tuple[int, frozenset]] = []
        self.key_history: list[list[int]] = [quasi_key(self.tangles.values())]

    @property
    def nested_set(self) -> list[Separation]:
        seen = []
        for p in self.pairs:
            if p.dist not in seen:
                seen.append(p.dist)
        return seen

    def pair_index(self, a: int, b: int) -> int:
        for i, p in enumerate(self.pairs):
            if {p.a, p.b} == {a, b}:
                return i
        raise KeyError((a, b))

    def tangles_of(self, i: int) -> tuple[ExtendedTangle, ExtendedTangle]:
        p = self.pairs[i]
        return self.tangles[p.a], self.tangles[p.b]

    def apply_replacement(self, i: int, into: OrientedSep, F: ForbiddenOracle, partner: Separation | None = None):
        """Replace pair ``i``'s distinguisher by ``into``'s separation.

        ``into`` goes to the pair's first tangle, its inverse to the second.
        Tangles admitting both orientations split.
        """
        u = self.u
        entry = self.pairs[i]
        tau, rho = self.tangles[entry.a], self.tangles[entry.b]
        old = entry.dist
        r = into.separation
        inv = u.inverse(into)
        if u.order(r) > u.order(old):
            raise InvalidReplacement(f"order of {r} exceeds that of {old}")
        if not (can_extend(tau, into, F, u) and can_extend(rho, inv, F, u)):
            raise InvalidReplacement(f"{r} cannot be added to the pair's tangles")

        split_tau = into not in tau and can_extend(tau, inv, F, u)
        split_rho = inv not in rho and can_extend(rho, into, F, u)
        self.tangles[entry.a] = tau.add(into, u)
        self.tangles[entry.b] = rho.add(inv, u)
        entry.dist = r

        in_E = {entry.a, entry.b}
        children = []  # (new id, parent id)
        for flag, parent, tg, x in ((split_tau, entry.a, tau, inv), (split_rho, entry.b, rho, into)):
            if flag:
                nid = self.next_id
                self.next_id += 1
                self.tangles[nid] = tg.add(x, u)
                in_E.add(nid)
                children.append((nid, parent))

        listed = set()
        for nid, parent in children:
            for other in sorted(self.tangles):
                key = frozenset((nid, other))
                if other == nid or key in listed:
                    continue
                listed.add(key)
                if other in in_E:
                    xi, zeta = self.tangles[nid], self.tangles[other]
                    dist = r if distinguishes(r, xi, zeta) else old
                    self.pairs.append(PairEntry(nid, other, dist, entry.bound))
                else:
                    src = self.pairs[self.pair_index(parent, other)]
                    self.pairs.append(PairEntry(nid, other, src.dist, src.bound))

        if children:
            self.split_count += 1
        self.events.append(Event(self.step, "replace", pair=i, old=old, new=r, partner=partner,
                                 split=bool(children)))

    def remove_fake(self, tid: int):
        if tid not in self.tangles:
            raise UnknownTangle(tid)
        removed = self.tangles.pop(tid)
        self.pairs = [p for p in self.pairs if tid not in (p.a, p.b)]
        self.fakes.append((tid, removed.elements))
        self.events.append(Event(self.step, "fake", tangle=tid, removed=removed.elements))
        log.info("step %d: dropped fake tangle %d", self.step, tid)


def min_cross_k(state: ToTState, u: Universe) -> int | None:
    """First pair position whose distinguisher crosses an earlier one."""
    pairs = state.pairs
    for k in range(1, len(pairs)):
        s = pairs[k].dist
        for j in range(k):
            if not is_nested(pairs[j].dist, s, u):
                return k
    return None


def _role_id(state: ToTState, k: int, j: int, role: str) -> int:
    return {"tau": state.pairs[k].a, "rho": state.pairs[k].b,
            "phi": state.pairs[j].a, "psi": state.pairs[j].b}[role]


def tot_step(state: ToTState, F: ForbiddenOracle, u: Universe):
    k = min_cross_k(state, u)
    if k is None:
        raise ValueError("distinguishers are already nested")
    nested_before = tuple(state.nested_set)
    n_events = len(state.events)
    s = state.pairs[k].dist
    crossing = [j for j in range(k) if not is_nested(state.pairs[j].dist, s, u)]

    def classify(j):
        return classify_cross(s, state.tangles_of(k), state.pairs[j].dist, state.tangles_of(j), F, u)

    outcomes = [(j, classify(j)) for j in crossing]
    first_s = next(((j, o) for j, o in outcomes if o.kind == "replace_s"), None)
    if first_s is not None:
        j, o = first_s
        state.apply_replacement(k, o.into, F, partner=state.pairs[j].dist)
    elif all(o.kind == "replace_t" for _, o in outcomes):
        for n, (j, o) in enumerate(outcomes):
            if n:
                o = classify(j)
            if o.kind == "replace_t":
                state.apply_replacement(j, o.into, F, partner=s)
            elif o.kind == "fake":
                state.remove_fake(_role_id(state, k, j, o.role))
                break
            else:
                raise InvariantViolation("s became replaceable after replacing earlier t")
    else:
        j, o = next((j, o) for j, o in outcomes if o.kind == "fake")
        state.remove_fake(_role_id(state, k, j, o.role))

    for ev in state.events[n_events:]:
        ev.nested_before = nested_before
    state.step += 1
    state.key_history.append(quasi_key(state.tangles.values()))


@dataclass
class ToTResult:
    state: ToTState
    tangles: dict[int, ExtendedTangle] = field(default_factory=dict)
    nested: list[Separation] = field(default_factory=list)


def run_tot(tangles: Sequence[ExtendedTangle], pairs: Sequence[tuple[int, int, Separation]],
            F: ForbiddenOracle, u: Universe, max_steps: int = DEFAULT_STEP_BUDGET) -> ToTResult:
    """Make the distinguishers nested.

    ``pairs`` lists ``(i, j, s)`` with ``s`` in S distinguishing tangles
    ``i`` and ``j``; every unordered pair of tangles must occur once.
    """
    n = len(tangles)
    covered = {frozenset((a, b)) for a, b, _ in pairs}
    if len(pairs) != n * (n - 1) // 2 or covered != {frozenset(c) for c in combinations(range(n), 2)}:
        raise ValueError("pairs must list every pair of tangles exactly once")
    for a, b, s in pairs:
        if not u.in_S(s):
            raise ValueError(f"input distinguisher {s} is not in S")
        if not distinguishes(s, tangles[a], tangles[b]):
            raise NotDistinguishing(f"{s} does not distinguish tangles {a} and {b}")
    state = ToTState(tangles, pairs, u)
    while min_cross_k(state, u) is not None:
        if state.step >= max_steps:
            raise StepBudgetExceeded(f"no nested set after {max_steps} steps")
        tot_step(state, F, u)
    return ToTResult(state, dict(state.tangles), state.nested_set)


def initial_pairs(tangles: Sequence[ExtendedTangle], u: Universe) -> list[tuple[int, int, Separation]]:
    return [(a, b, find_distinguisher(tangles[a], tangles[b], u))
            for a, b in combinations(range(len(tangles)), 2)]


def tree_of_tangles(S: Sequence[Separation], F: ForbiddenOracle, u: Universe,
                    max_steps: int = DEFAULT_STEP_BUDGET) -> ToTResult:
    """Maximal tangles of ``S`` by layered search, then :func:`run_tot`."""
    from .search import maximal_tangles

    tangles = [ExtendedTangle.from_tangle(t, u) for t in maximal_tangles(S, F, u)]
    return run_tot(tangles, initial_pairs(tangles, u), F, u, max_steps)


def _show(u: Universe, xs) -> str:
    describe = getattr(u, "describe", repr)
    return "{" + ", ".join(describe(x) for x in sorted(xs, key=OrientedSep.sort_key)) + "}"


@dataclass
class ToTReport:
    violations: list[str] = field(default_factory=list)
    checked_realness: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_tot_output(result: ToTResult, F: ForbiddenOracle, u: Universe,
                        S: Sequence[Separation] | None = None, realness: bool = True) -> ToTReport:
    """Check nestedness, distinguisher validity, order bounds and, at desk
    scale, that every real maximal tangle of S survives and every dropped
    tangle is fake."""
    report = ToTReport()
    v = report.violations
    state = result.state
    tangles = result.tangles
    for s, t in combinations(result.nested, 2):
        if not is_nested(s, t, u):
            v.append(f"distinguishers {_show(u, [s.forward])} and {_show(u, [t.forward])} cross")
    ids = sorted(tangles)
    listed = {frozenset((p.a, p.b)) for p in state.pairs}
    for a, b in combinations(ids, 2):
        if frozenset((a, b)) not in listed:
            v.append(f"tangles {a} and {b} have no distinguisher")
    for i, p in enumerate(state.pairs):
        if p.a not in tangles or p.b not in tangles:
            v.append(f"pair {i} references a removed tangle")
            continue
        if not distinguishes(p.dist, tangles[p.a], tangles[p.b]):
            v.append(f"pair {i} is not distinguished by its separation")
        if u.order(p.dist) > p.bound:
            v.append(f"pair {i} distinguisher order {u.order(p.dist)} exceeds bound {p.bound}")
    for tid, t in tangles.items():
        if any(u.order(x) > t.max_base_order for x in t.extension):
            v.append(f"tangle {tid} exceeds its order cap")
    if realness and S is not None:
        from .bruteforce import brute_maximal, brute_universe_tangles

        S = list(S)
        p = max((u.order(s) for s in S), default=0)
        big = brute_universe_tangles(u, F, p)
        restrictions = [frozenset(x for x in t.elements if u.in_S(x)) for t in tangles.values()]
        for tau in brute_maximal(S, F, u):
            if any(tau <= g for g in big) and not any(tau <= r for r in restrictions):
                v.append(f"real maximal tangle {_show(u, tau)} lost")
        for tid, elements in state.fakes:
            q = max((u.order(x) for x in elements), default=0)
            if any(elements <= g for g in brute_universe_tangles(u, F, q)):
                v.append(f"tangle {tid} was dropped as fake but is real")
        report.checked_realness = True
    return report
