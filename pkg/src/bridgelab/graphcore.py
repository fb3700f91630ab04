"""Small dense undirected graphs stored as per-vertex adjacency bitsets.

Vertices are ``0..n-1``; edges are normalised to ``(min, max)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from bridgelab.errors import InvalidArgument

MAX_N = 16

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise InvalidArgument(f"vertex count must be in 1..{MAX_N}, got {self.n}")
        if len(self.adj) != self.n:
            raise InvalidArgument("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidArgument(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise InvalidArgument(f"self-loop at {u}")
            w = row
            while w:
                low = w & -w
                if not self.adj[low.bit_length() - 1] >> u & 1:
                    raise InvalidArgument("adjacency is not symmetric")
                w ^= low

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise InvalidArgument("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def star(cls, n: int) -> Graph:
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    def edges(self) -> list[Edge]:
        out = []
        for u, row in enumerate(self.adj):
            w = row >> (u + 1)
            v = u + 1
            while w:
                if w & 1:
                    out.append((u, v))
                w >>= 1
                v += 1
        return out

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def is_connected(self) -> bool:
        return _reach(self.adj, 0) == (1 << self.n) - 1

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            pu = perm[u]
            for v in _bits(row):
                rows[pu] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Graph:
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or len(lines[0]) != 1:
            raise InvalidArgument("graph text must start with a line holding n")
        try:
            n = int(lines[0][0])
            edges = [(int(a), int(b)) for a, b in lines[1:]]
        except ValueError as exc:
            raise InvalidArgument(f"malformed graph text: {exc}") from None
        return cls.from_edges(n, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


@dataclass(frozen=True)
class ComponentPartition:
    labels: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.sizes]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _reach(adj: Sequence[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the components, ordered by smallest vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        start = (left & -left).bit_length() - 1
        comp = _reach(g.adj, start)
        out.append(comp)
        left &= ~comp
    return out


def components(g: Graph) -> ComponentPartition:
    labels = [0] * g.n
    sizes = []
    for cid, mask in enumerate(component_masks(g)):
        for v in _bits(mask):
            labels[v] = cid
        sizes.append(mask.bit_count())
    return ComponentPartition(tuple(labels), tuple(sorted(sizes, reverse=True)))


def component_graphs(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Each component as its own graph, with the original vertex of each new index."""
    out = []
    for mask in component_masks(g):
        verts = _bits(mask)
        out.append((g.induced(verts), verts))
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidArgument(f"vertex {v} out of range for n={g.n}")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InvalidArgument(f"cannot add self-loop at {u}")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def bridges(g: Graph) -> frozenset[Edge]:
    """Bridges via one depth-first low-link pass per component."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, parent, remaining neighbours)
        stack = [(root, -1, g.adj[root])]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                w = (rest & -rest).bit_length() - 1
                stack[-1] = (v, parent, rest & (rest - 1))
                if w == parent:
                    continue
                if disc[w] >= 0:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, g.adj[w]))
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add((min(v, parent), max(v, parent)))
    return frozenset(found)


def bridge_count_at(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for e in bridges(g) if v in e)


def frag(g: Graph) -> int:
    return g.n - max(mask.bit_count() for mask in component_masks(g))
