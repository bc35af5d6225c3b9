"""Command line interface.

Exit codes: 0 ok, 2 malformed instance, 3 precondition or contract
violation, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bruteforce import all_tangles_of, brute_tangles
from .core import OrientedSep, Separation
from .duality import STree, run_duality, validate_stree
from .errors import TangleError
from .forbidden import ExplicitF, stars_only
from .instance import (
    Instance,
    InstanceError,
    dumps,
    load_instance,
    oriented_doc,
    separation_doc,
    tangle_doc,
)
from .search import layered_search, seeded_search
from .tot import (
    DEFAULT_STEP_BUDGET,
    ExtendedTangle,
    PairEntry,
    ToTResult,
    ToTState,
    tree_of_tangles,
    validate_tot_output,
)

EXIT_OK, EXIT_MALFORMED, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4


class PreconditionError(TangleError):
    pass


class VerificationFailed(TangleError):
    pass


# --- documents --------------------------------------------------------------

def search_doc(inst: Instance, result, maximal: bool, extra: dict | None = None) -> dict:
    u = inst.universe
    doc = {"enumeration": [separation_doc(u, s) for s in result.enumeration]}
    if maximal:
        doc["kind"] = "maximal"
        doc["tangles"] = [tangle_doc(u, t) for t in result.maximal()]
    else:
        doc["kind"] = "layers"
        doc["layers"] = [[tangle_doc(u, t) for t in layer] for layer in result.layers]
    if result.seed:
        doc["seed"] = tangle_doc(u, result.seed)
    doc.update(extra or {})
    return doc


def duality_doc(inst: Instance, result) -> dict:
    u = inst.universe
    if result.tree is not None:
        return {
            "kind": "stree",
            "clash": separation_doc(u, result.clash),
            "nodes": [{"id": i, "star": tangle_doc(u, star)} for i, star in enumerate(result.tree.stars)],
            "edges": [{"from": a, "to": b, "label": separation_doc(u, x.separation),
                       "towards_to": oriented_doc(u, x)} for a, b, x in result.tree.edges],
        }
    return {
        "kind": "forced",
        "L": [oriented_doc(u, x) for x in result.forced.L],
        "M": [{"forced": oriented_doc(u, x), "star": tangle_doc(u, sigma)} for x, sigma in result.forced.M],
        "warnings": list(result.warnings),
    }


def tot_doc(inst: Instance, result: ToTResult) -> dict:
    u = inst.universe
    st = result.state

    def sep(s):
        return None if s is None else separation_doc(u, s)

    events = []
    for ev in st.events:
        if ev.kind == "replace":
            events.append({"step": ev.step, "kind": "replace", "pair": ev.pair, "old": sep(ev.old),
                           "new": sep(ev.new), "partner": sep(ev.partner), "split": ev.split})
        else:
            events.append({"step": ev.step, "kind": "fake", "tangle": ev.tangle,
                           "removed": tangle_doc(u, ev.removed)})
    return {
        "kind": "tot",
        "tangles": [{"id": tid, "base": tangle_doc(u, t.base), "extension": tangle_doc(u, t.extension),
                     "max_base_order": t.max_base_order} for tid, t in sorted(result.tangles.items())],
        "pairs": [{"index": i, "tangles": [p.a, p.b], "distinguisher": separation_doc(u, p.dist),
                   "order": u.order(p.dist), "bound": p.bound} for i, p in enumerate(st.pairs)],
        "nested": [separation_doc(u, s) for s in result.nested],
        "steps": st.step,
        "splits": st.split_count,
        "events": events,
    }


def _dot_label(u, x: OrientedSep) -> str:
    left = u.left(x)
    return "{%s}|{%s}" % (",".join(u.labels_of(left)), ",".join(u.labels_of(u.full ^ left)))


def _dot_star(u, star) -> str:
    return "\\n".join(_dot_label(u, x) for x in sorted(star, key=OrientedSep.sort_key)) or "{}"


def duality_dot(inst: Instance, result) -> str:
    u = inst.universe
    lines = ["digraph stree {"]
    if result.tree is None:
        lines.append('  label="forced list: %s";' % ", ".join(_dot_label(u, x) for x in result.forced.L))
    else:
        for i, star in enumerate(result.tree.stars):
            lines.append(f'  n{i} [shape=box, label="{_dot_star(u, star)}"];')
        for a, b, x in result.tree.edges:
            lines.append(f'  n{a} -> n{b} [label="{_dot_label(u, x)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tot_dot(inst: Instance, result: ToTResult) -> str:
    u = inst.universe
    lines = ["graph tot {"]
    for tid, t in sorted(result.tangles.items()):
        lines.append(f'  t{tid} [label="tangle {tid}\\n{len(t)} separations"];')
    for p in result.state.pairs:
        lines.append(f'  t{p.a} -- t{p.b} [label="{_dot_label(u, p.dist.forward)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- parsing emitted documents back -------------------------------------------

def _ori(u, d) -> OrientedSep:
    return u.from_left(d["left"])


def _sep(u, d) -> Separation:
    return u.separation(u.mask_of(d["left"]))


def stree_from_doc(inst: Instance, doc: dict) -> STree:
    u = inst.universe
    tree = STree()
    for node in doc["nodes"]:
        tree.add_node(frozenset(_ori(u, x) for x in node["star"]))
    for e in doc["edges"]:
        tree.add_edge(e["from"], e["to"], _ori(u, e["towards_to"]))
    return tree


def tot_from_doc(inst: Instance, doc: dict) -> ToTResult:
    u = inst.universe
    state = ToTState([], [], u)
    for t in doc["tangles"]:
        state.tangles[t["id"]] = ExtendedTangle(frozenset(_ori(u, x) for x in t["base"]),
                                                frozenset(_ori(u, x) for x in t["extension"]),
                                                t["max_base_order"])
    for p in doc["pairs"]:
        a, b = p["tangles"]
        state.pairs.append(PairEntry(a, b, _sep(u, p["distinguisher"]), p["bound"]))
    for ev in doc["events"]:
        if ev["kind"] == "fake":
            state.fakes.append((ev["tangle"], frozenset(_ori(u, x) for x in ev["removed"])))
    state.step = doc["steps"]
    state.split_count = doc["splits"]
    return ToTResult(state, dict(state.tangles), [_sep(u, s) for s in doc["nested"]])


# --- commands -----------------------------------------------------------------

def _explicit_stars(inst: Instance) -> ExplicitF:
    if inst.forbidden_kind != "explicit":
        raise PreconditionError("duality needs an explicit list of forbidden stars")
    if not stars_only(inst.F, inst.universe):
        raise PreconditionError("every forbidden member must be a star")
    return inst.F


def cmd_search(inst: Instance, args) -> str:
    S = inst.S
    if args.prefix is not None:
        if not 0 <= args.prefix <= len(S):
            raise PreconditionError(f"--prefix must lie in [0, {len(S)}]")
        S = S[:args.prefix]
    extra = {}
    if args.seed_duality:
        F = _explicit_stars(inst)
        dual = run_duality(F, S, inst.universe)
        if dual.tree is not None:
            extra["duality"] = "stree"
            result = layered_search(S, inst.F, inst.universe)
        else:
            extra["duality"] = "forced"
            result = seeded_search(S, inst.F, inst.universe, dual.forced.L)
    else:
        result = layered_search(S, inst.F, inst.universe)
    return dumps(search_doc(inst, result, args.maximal, extra))


def cmd_duality(inst: Instance, args) -> str:
    F = _explicit_stars(inst)
    result = run_duality(F, inst.S, inst.universe)
    if args.emit == "dot":
        return duality_dot(inst, result)
    return dumps(duality_doc(inst, result))


def cmd_tot(inst: Instance, args) -> str:
    result = tree_of_tangles(inst.S, inst.F, inst.universe, max_steps=args.max_steps)
    if args.emit == "dot":
        return tot_dot(inst, result)
    return dumps(tot_doc(inst, result))


def _layers_equal(a, b) -> bool:
    return len(a) == len(b) and all(set(x) == set(y) for x, y in zip(a, b))


def cmd_verify(inst: Instance, args) -> str:
    u, S, F = inst.universe, inst.S, inst.F
    cert = json.loads(Path(args.certificate).read_text()) if args.certificate else None
    problems = []
    if args.mode == "search":
        brute = brute_tangles(S, F, u)
        if cert is not None:
            if cert.get("kind") != "layers":
                raise PreconditionError("search certificates must be layer documents")
            layers = [[frozenset(_ori(u, x) for x in t) for t in layer] for layer in cert["layers"]]
        else:
            layers = layered_search(S, F, u).layers
        if not _layers_equal(layers, brute):
            problems.append("layers differ from brute-force enumeration")
    elif args.mode == "duality":
        expl = _explicit_stars(inst)
        tangles = all_tangles_of(S, F, u)
        doc = cert if cert is not None else duality_doc(inst, run_duality(expl, S, u))
        if doc.get("kind") == "stree":
            if not validate_stree(stree_from_doc(inst, doc), expl, S, u):
                problems.append("S-tree fails validation")
            if tangles:
                problems.append(f"S-tree emitted but {len(tangles)} F-tangles exist")
        elif doc.get("kind") == "forced":
            forced = frozenset(_ori(u, x) for x in doc["L"])
            if any(not forced <= t for t in tangles):
                problems.append("forced list is not contained in every F-tangle")
        else:
            raise PreconditionError("unknown duality certificate kind")
    else:
        if cert is not None:
            if cert.get("kind") != "tot":
                raise PreconditionError("tot certificates must be tot documents")
            result = tot_from_doc(inst, cert)
        else:
            result = tree_of_tangles(S, F, u, max_steps=args.max_steps)
        problems.extend(validate_tot_output(result, F, u, S).violations)
    for p in problems:
        print(f"verify: {p}", file=sys.stderr)
    if problems:
        raise VerificationFailed(f"{len(problems)} check(s) failed")
    return ""


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abstract-tangles", description=__doc__.splitlines()[0])
    ap.add_argument("--allow-trivial", action="store_true",
                    help="accept separations with an empty or full left side")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="layered tangle search")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true", help="emit only the maximal tangles")
    p.add_argument("--prefix", type=int, help="use only the first N separations")
    p.add_argument("--seed-duality", action="store_true", help="seed the search with the forced list")
    p.add_argument("--emit", choices=["json"], default="json")

    p = sub.add_parser("duality", help="S-tree certificate or forced list")
    p.add_argument("file")
    p.add_argument("--emit", choices=["json", "dot"], default="json")

    p = sub.add_parser("tot", help="nested distinguishers for the maximal tangles")
    p.add_argument("file")
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)

    p = sub.add_parser("verify", help="cross-check against brute force")
    p.add_argument("file")
    p.add_argument("--mode", choices=["search", "duality", "tot"], required=True)
    p.add_argument("--certificate", help="re-check a previously emitted document instead")
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
    return ap


COMMANDS = {"search": cmd_search, "duality": cmd_duality, "tot": cmd_tot, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = load_instance(args.file, allow_trivial=args.allow_trivial)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        out = COMMANDS[args.command](inst, args)
    except VerificationFailed as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (TangleError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
