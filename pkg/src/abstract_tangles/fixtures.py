"""Small named instances used by tests, scripts and the shipped JSON files."""

from __future__ import annotations

from .instance import Instance, parse_instance


def _doc(labels, edges, lefts, forbidden):
    return {
        "version": 1,
        "ground_set": [str(x) for x in labels],
        "graph": {"edges": [[str(a), str(b), w] for a, b, w in edges]},
        "separations": [{"left": [str(x) for x in left]} for left in lefts],
        "forbidden": forbidden,
    }


COVER3 = {"kind": "cover", "max_size": 3}
SINGLETONS3 = [[0], [1], [2]]


def _explicit(members):
    return {"kind": "explicit", "members": [[{"left": [str(x) for x in left]} for left in m] for m in members]}


DOCS = {
    # triangle and path on three vertices, S = the three vertex separations
    "k3": _doc(range(3), [(0, 1, 1), (1, 2, 1), (0, 2, 1)], SINGLETONS3, COVER3),
    "p3": _doc(range(3), [(0, 1, 1), (1, 2, 1)], SINGLETONS3, COVER3),
    # 4-cycle with two crossing separations u0 = 01|23 and w0 = 12|03
    "c4": _doc(range(4), [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [[0, 1], [1, 2]], COVER3),
    # single edge, S = {0|1}; both singleton stars / one singleton star
    "dual1": _doc(range(2), [(0, 1, 1)], [[0]], _explicit([[[0]], [[1]]])),
    "dual2": _doc(range(2), [(0, 1, 1)], [[0]], _explicit([[[0]]])),
    # path 0-1-2-3 with the nested chain s1 <= s2 <= s3 (left sides 0, 01, 012)
    "chain": _doc(
        range(4), [(0, 1, 1), (1, 2, 1), (2, 3, 1)], [[0], [0, 1], [0, 1, 2]],
        _explicit([[[1, 2, 3]], [[0], [2, 3]], [[0, 1], [3]], [[0, 1, 2]]]),
    ),
}


def fixture(name: str) -> Instance:
    return parse_instance(DOCS[name], name=name)


def names() -> list[str]:
    return list(DOCS)
