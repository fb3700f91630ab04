"""Canonical forms and automorphism counts for small plain and rooted graphs.

The search refines an ordered vertex partition to an equitable one, then
individualizes vertices of the first non-singleton cell and recurses. Every
leaf is a vertex ordering; the canonical code is the smallest upper-triangle
adjacency bitstring over all leaves. Since the automorphism group acts freely
on the leaves, the number of leaves that reach the minimum is exactly
``|Aut|``.

Siblings that are twins (``N(u) - {w} == N(w) - {u}``) are swapped by the
transposition ``(u w)``, an automorphism fixing the current prefix, so only
one of them is explored and its leaf count is scaled by the class size.
Without that, empty graphs and stars would cost ``n!`` leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from bridgelab.errors import InvalidArgument
from bridgelab.graphcore import Graph


def _hex_bits(n: int, bits: int) -> str:
    length = n * (n - 1) // 2
    digits = -(-length // 4)
    if digits == 0:
        return ""
    return format(bits << (4 * digits - length), f"0{digits}x")


@dataclass(frozen=True, order=True)
class CanonicalCode:
    n: int
    bits: int

    @property
    def key(self) -> str:
        return f"{self.n}:{_hex_bits(self.n, self.bits)}"

    def __str__(self) -> str:
        return self.key

    def to_graph(self) -> Graph:
        return _graph_from_bits(self.n, self.bits)

    @classmethod
    def parse(cls, key: str) -> CanonicalCode:
        n_text, _, hex_text = key.partition(":")
        return cls(int(n_text), _parse_bits(int(n_text), hex_text))


@dataclass(frozen=True, order=True)
class RootedCanonicalCode:
    """Canonical code of a rooted graph; the root always sits at position 0."""

    n: int
    bits: int

    @property
    def key(self) -> str:
        return f"{self.n}:{_hex_bits(self.n, self.bits)}:r0"

    def __str__(self) -> str:
        return self.key

    def to_graph(self) -> tuple[Graph, int]:
        return _graph_from_bits(self.n, self.bits), 0


@dataclass(frozen=True)
class Labeling:
    """Result of a canonical search: the code, one canonical order, and |Aut|."""

    bits: int
    order: tuple[int, ...]
    aut: int


def _parse_bits(n: int, hex_text: str) -> int:
    length = n * (n - 1) // 2
    digits = -(-length // 4)
    if len(hex_text) != digits:
        raise InvalidArgument(f"expected {digits} hex digits for n={n}")
    if digits == 0:
        return 0
    return int(hex_text, 16) >> (4 * digits - length)


def _graph_from_bits(n: int, bits: int) -> Graph:
    edges = []
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def _leaf_bits(adj: Sequence[int], order: Sequence[int]) -> int:
    bits = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (row >> order[j] & 1)
    return bits


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _twins(adj: Sequence[int], u: int, w: int) -> bool:
    return adj[u] & ~(1 << w) == adj[w] & ~(1 << u)


def _search(adj: Sequence[int], cells: list[list[int]]) -> tuple[int, tuple[int, ...], int]:
    cells = _refine(adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = tuple(c[0] for c in cells)
        return _leaf_bits(adj, order), order, 1

    reps: list[list[int]] = []  # [vertex, weight]
    for w in cells[target]:
        for rep in reps:
            if _twins(adj, rep[0], w):
                rep[1] += 1
                break
        else:
            reps.append([w, 1])

    best_bits = -1
    best_order: tuple[int, ...] = ()
    count = 0
    for u, weight in reps:
        rest = [v for v in cells[target] if v != u]
        child = cells[:target] + [[u], rest] + cells[target + 1:]
        bits, order, k = _search(adj, child)
        if best_bits < 0 or bits < best_bits:
            best_bits, best_order, count = bits, order, k * weight
        elif bits == best_bits:
            count += k * weight
    return best_bits, best_order, count


def canonical_labeling(g: Graph) -> Labeling:
    bits, order, aut = _search(g.adj, [list(range(g.n))])
    return Labeling(bits, order, aut)


def canonical_rooted_labeling(g: Graph, root: int) -> Labeling:
    if not 0 <= root < g.n:
        raise InvalidArgument(f"root {root} out of range for n={g.n}")
    cells = [[root]]
    if g.n > 1:
        cells.append([v for v in range(g.n) if v != root])
    bits, order, aut = _search(g.adj, cells)
    return Labeling(bits, order, aut)


def canonical_form(g: Graph) -> CanonicalCode:
    return CanonicalCode(g.n, canonical_labeling(g).bits)


def canonical_rooted_form(g: Graph, root: int) -> RootedCanonicalCode:
    return RootedCanonicalCode(g.n, canonical_rooted_labeling(g, root).bits)


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class in canonical vertex order."""
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(lab.order):
        perm[v] = pos
    return g.relabel(perm)


def automorphism_count(g: Graph) -> int:
    return canonical_labeling(g).aut


def rooted_automorphism_count(g: Graph, root: int) -> int:
    return canonical_rooted_labeling(g, root).aut


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and canonical_form(g1) == canonical_form(g2)
