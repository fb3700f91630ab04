"""Encode a class member as a rooted connected member plus one bit, and back.

Encoding: pick a smallest component C, a vertex v of C touching at most one
bridge (one exists because a graph on k vertices has at most k - 1 bridges),
record that bridge count as b, and join v to one vertex of every other
component. Every joining edge is a bridge at v whose far side holds a whole
component, so at least |C| vertices, while an original bridge at v cuts off
at most |C| - 1. Decoding deletes the root bridges accordingly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from bridgelab.classes import ClassSpec, connected_contains, contains
from bridgelab.enumeration import enumerate_all, enumerate_connected, rooted_connected_count
from bridgelab.errors import InvalidArgument, InvalidCodeword, VerificationFailure
from bridgelab.graphcore import Graph, _reach, add_edge, bridges, component_graphs
from bridgelab.iso import (
    RootedCanonicalCode,
    canonical_form,
    canonical_labeling,
    canonical_rooted_form,
    is_isomorphic,
)


@dataclass(frozen=True)
class EncodedGraph:
    h: Graph
    root: int
    b: int

    def __post_init__(self):
        if self.b not in (0, 1):
            raise InvalidCodeword(f"b must be 0 or 1, got {self.b}")
        if not 0 <= self.root < self.h.n:
            raise InvalidCodeword(f"root {self.root} out of range")
        if not self.h.is_connected():
            raise InvalidCodeword("encoded graph must be connected")

    def rooted_code(self) -> RootedCanonicalCode:
        return canonical_rooted_form(self.h, self.root)


def side_size(h: Graph, root: int, edge: tuple[int, int]) -> int:
    """Vertices of ``h - edge`` not in the root's component."""
    cut = h.remove_edges([edge])
    return h.n - _reach(cut.adj, root).bit_count()


def _root_bridges(h: Graph, root: int) -> list[tuple[tuple[int, int], int]]:
    return sorted(
        ((e, side_size(h, root, e)) for e in bridges(h) if root in e),
        key=lambda item: (item[1], item[0]),
    )


def encode(c: ClassSpec, g: Graph) -> EncodedGraph:
    if not contains(c, g):
        raise InvalidArgument(f"graph is not a member of {c}")
    g_bridges = bridges(g)
    comps = component_graphs(g)
    # smallest component, ties by canonical code, then by lowest vertex
    small_idx = min(
        range(len(comps)),
        key=lambda i: (comps[i][0].n, canonical_form(comps[i][0]), comps[i][1][0]),
    )
    small, small_verts = comps[small_idx]

    candidates = []
    for local, v in enumerate(small_verts):
        b = sum(1 for e in g_bridges if v in e)
        if b <= 1:
            candidates.append((canonical_rooted_form(small, local), v, b))
    if not candidates:
        raise AssertionError("no vertex of the smallest component touches at most one bridge")
    _, v, b = min(candidates)

    h = g
    for i, (comp, verts) in enumerate(comps):
        if i == small_idx:
            continue
        first = verts[canonical_labeling(comp).order[0]]
        h = add_edge(h, v, first)

    if b == 1:
        sizes = dict(_root_bridges(h, v))
        kept = [sizes[e] for e in g_bridges if v in e]
        added = [s for e, s in sizes.items() if e not in g_bridges]
        assert kept[0] <= small.n - 1 and all(s >= small.n for s in added), (
            "added bridges are not separable from the original bridge"
        )
    return EncodedGraph(h, v, b)


def decode(c: ClassSpec, e: EncodedGraph) -> Graph:
    root_bridges = _root_bridges(e.h, e.root)
    if e.b == 0:
        return e.h.remove_edges(edge for edge, _ in root_bridges)
    if not root_bridges:
        raise InvalidCodeword("b=1 but the root touches no bridge")
    if len(root_bridges) > 1 and root_bridges[0][1] == root_bridges[1][1]:
        raise InvalidCodeword("b=1 but the smallest root bridge side is not unique")
    return e.h.remove_edges(edge for edge, _ in root_bridges[1:])


@dataclass(frozen=True)
class InjectivityRow:
    n: int
    unlabelled_total: int
    rooted_connected: int
    unlabelled_connected: int
    roundtrip_ok: int
    distinct_codewords: int

    @property
    def first_bound(self) -> bool:
        return self.unlabelled_total <= 2 * self.rooted_connected

    @property
    def second_bound(self) -> bool:
        return 2 * self.rooted_connected <= 2 * self.n * self.unlabelled_connected

    @property
    def passed(self) -> bool:
        return (
            self.first_bound
            and self.second_bound
            and self.roundtrip_ok == self.unlabelled_total
            and self.distinct_codewords == self.unlabelled_total
        )


def codewords(c: ClassSpec, n: int) -> list[tuple[str, str, int]]:
    """(member code, rooted code of the encoding, b) for every member, sorted by member code."""
    out = []
    for key, entry in enumerate_all(c, n):
        enc = encode(c, entry.graph)
        out.append((key, enc.rooted_code().key, enc.b))
    return out


def codewords_jsonl(c: ClassSpec, n: int) -> str:
    return "".join(
        json.dumps({"code": key, "rooted": rooted, "b": b}, separators=(",", ":")) + "\n"
        for key, rooted, b in codewords(c, n)
    )


def verify_injectivity_bound(c: ClassSpec, n: int) -> InjectivityRow:
    members = enumerate_all(c, n)
    seen: dict[tuple[str, int], str] = {}
    ok = 0
    for key, entry in members:
        g = entry.graph
        enc = encode(c, g)
        if not connected_contains(c, enc.h):
            raise VerificationFailure(f"encoding left the class {c}", enc.h.to_text())
        back = decode(c, enc)
        if not is_isomorphic(back, g):
            raise VerificationFailure(f"roundtrip failed for {key}", g.to_text())
        ok += 1
        word = (enc.rooted_code().key, enc.b)
        if word in seen:
            raise VerificationFailure(
                f"codeword collision between {seen[word]} and {key}", g.to_text()
            )
        seen[word] = key
    row = InjectivityRow(
        n=n,
        unlabelled_total=len(members),
        rooted_connected=rooted_connected_count(c, n),
        unlabelled_connected=len(enumerate_connected(c, n)),
        roundtrip_ok=ok,
        distinct_codewords=len(seen),
    )
    if not (row.first_bound and row.second_bound):
        raise VerificationFailure(
            f"count bound fails at n={n}: {row.unlabelled_total} <= 2*{row.rooted_connected}"
            f" <= 2*{n}*{row.unlabelled_connected}"
        )
    return row
