"""Instance documents: ground set, weighted graph, enumerated S and F.

Schema (version 1)::

    {"version": 1,
     "ground_set": ["0", "1", "2"],
     "graph": {"edges": [["0", "1", 1], ...]},
     "separations": [{"left": ["0"]}, ...],
     "forbidden": {"kind": "cover", "max_size": 3}
               | {"kind": "explicit", "members": [[{"left": [...]}, ...], ...]}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .bipartition import BipartitionUniverse, WeightedGraph, build_universe
from .core import OrientedSep, Separation
from .errors import TangleError
from .forbidden import CoverOracle, ExplicitF

SCHEMA_VERSION = 1


class InstanceError(TangleError, ValueError):
    """Malformed instance document."""


@dataclass
class Instance:
    name: str
    universe: BipartitionUniverse
    forbidden_kind: str
    F: object  # ExplicitF or CoverOracle
    doc: dict

    @property
    def S(self) -> list[Separation]:
        return list(self.universe.system)


def _require(cond, msg):
    if not cond:
        raise InstanceError(msg)


def parse_instance(doc: dict, name: str = "instance", allow_trivial: bool = False) -> Instance:
    _require(isinstance(doc, dict), "instance must be a JSON object")
    _require(doc.get("version", SCHEMA_VERSION) == SCHEMA_VERSION, f"unsupported version {doc.get('version')}")
    labels = doc.get("ground_set")
    _require(isinstance(labels, list) and labels, "ground_set must be a nonempty list")
    edges = doc.get("graph", {}).get("edges", [])
    _require(isinstance(edges, list), "graph.edges must be a list")
    try:
        parsed_edges = []
        for e in edges:
            _require(isinstance(e, list) and len(e) in (2, 3), f"bad edge {e!r}")
            w = e[2] if len(e) == 3 else 1
            _require(isinstance(w, int) and not isinstance(w, bool) and w >= 0,
                     f"edge weight must be a nonnegative integer: {e!r}")
            parsed_edges.append((e[0], e[1], w))
        graph = WeightedGraph.from_labels(labels, parsed_edges)
        seps = doc.get("separations", [])
        _require(isinstance(seps, list), "separations must be a list")
        lefts = []
        for s in seps:
            _require(isinstance(s, dict) and isinstance(s.get("left"), list), f"bad separation {s!r}")
            lefts.append(s["left"])
        u = build_universe(graph, lefts)
        if not allow_trivial:
            for s in u.system:
                _require(s.sep_id != 0, "left sides must be nonempty proper subsets")
        forb = doc.get("forbidden", {"kind": "cover", "max_size": 3})
        kind = forb.get("kind")
        if kind == "cover":
            m = forb.get("max_size", 3)
            _require(isinstance(m, int) and m >= 1, "cover max_size must be a positive integer")
            F = CoverOracle(u, m)
        elif kind == "explicit":
            members = forb.get("members", [])
            _require(isinstance(members, list), "explicit members must be a list")
            F = ExplicitF([[u.from_left(x["left"]) for x in m] for m in members])
            for m in F.members:
                _require(all(u.in_S(x) for x in m), "explicit members must consist of separations of S")
        else:
            raise InstanceError(f"unknown forbidden kind {kind!r}")
    except InstanceError:
        raise
    except (TangleError, ValueError, KeyError, TypeError) as exc:
        raise InstanceError(f"{type(exc).__name__}: {exc}") from exc
    return Instance(name, u, kind, F, doc)


def load_instance(path, allow_trivial: bool = False) -> Instance:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON ({exc})") from exc
    return parse_instance(doc, name=path.stem, allow_trivial=allow_trivial)


# --- serialisation of results ---------------------------------------------

def oriented_doc(u: BipartitionUniverse, x: OrientedSep) -> dict:
    return {"left": u.labels_of(u.left(x))}


def separation_doc(u: BipartitionUniverse, s: Separation) -> dict:
    return {"left": u.labels_of(s.sep_id), "right": u.labels_of(u.full ^ s.sep_id)}


def tangle_doc(u: BipartitionUniverse, tangle) -> list[dict]:
    return [oriented_doc(u, x) for x in sorted(tangle, key=OrientedSep.sort_key)]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
