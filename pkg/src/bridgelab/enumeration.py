"""Exhaustive generation of unlabelled class members.

Connected members come from class-specific generators with canonical dedup:

* trees grow by adding a leaf (every tree on n >= 2 vertices has one);
* bridged-cycle graphs grow by hanging a new cycle off any vertex with a
  single bridge (the cycle/bridge skeleton is a tree, so a leaf cycle exists);
* connected graphs grow by adding a vertex with a non-empty neighbourhood
  (every connected graph has a non-cut vertex).

All members of a decomposable class are then the multisets of connected
members whose sizes sum to n. :func:`labelled_filter_oracle` walks every
labelled graph by brute-force orbit enumeration and shares no code with the
generators beyond the membership predicate.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterable, Iterator

import numpy as np

from bridgelab.classes import (
    ALL_GRAPHS,
    CYCLES_AT_LEAST,
    FORESTS,
    ClassSpec,
    connected_contains,
    contains,
)
from bridgelab.errors import CapabilityError
from bridgelab.graphcore import Graph, add_edge, disjoint_union
from bridgelab.iso import canonical_form, canonical_labeling, canonical_rooted_form

GENERATED_CAP = 10
ALL_GRAPHS_CAP = 7
ORACLE_CAP = 7


def enumeration_cap(c: ClassSpec) -> int:
    return ALL_GRAPHS_CAP if c.id == ALL_GRAPHS else GENERATED_CAP


def check_cap(c: ClassSpec, n: int) -> None:
    cap = enumeration_cap(c)
    if n < 1:
        raise CapabilityError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapabilityError(f"n={n} exceeds the enumeration cap {cap} for class {c}")


@dataclass(frozen=True)
class Entry:
    graph: Graph  # in canonical vertex order
    aut: int


@dataclass
class UnlabelledSet:
    n: int
    cls: ClassSpec
    entries: dict[str, Entry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[str, Entry]]:
        return iter(self.entries.items())

    def graphs(self) -> list[Graph]:
        return [e.graph for e in self.entries.values()]

    def to_jsonl(self) -> str:
        lines = []
        for key, e in self.entries.items():
            rec = {"code": key, "n": self.n, "edges": [list(x) for x in e.graph.edges()], "aut": e.aut}
            lines.append(json.dumps(rec, separators=(",", ":")))
        return "".join(line + "\n" for line in lines)


def _sorted_set(n: int, c: ClassSpec, found: dict[str, Entry]) -> UnlabelledSet:
    return UnlabelledSet(n, c, {k: found[k] for k in sorted(found)})


def _canon_entry(g: Graph) -> tuple[str, Entry]:
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(lab.order):
        perm[v] = pos
    return canonical_form(g).key, Entry(g.relabel(perm), lab.aut)


def _canon_batch(graphs: list[Graph]) -> dict[str, Entry]:
    out: dict[str, Entry] = {}
    for g in graphs:
        key, entry = _canon_entry(g)
        out.setdefault(key, entry)
    return out


def _dedup(candidates: list[Graph], jobs: int) -> dict[str, Entry]:
    if jobs <= 1 or len(candidates) < 64:
        return _canon_batch(candidates)
    size = -(-len(candidates) // jobs)
    chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
    merged: dict[str, Entry] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_canon_batch, chunks):
            for key in part:
                merged.setdefault(key, part[key])
    # entries for one key are identical canonical graphs, so merge order is irrelevant
    return merged


def _with_new_vertex(g: Graph, neighbours: Iterable[int]) -> Graph:
    rows = list(g.adj) + [0]
    new = g.n
    for v in neighbours:
        rows[v] |= 1 << new
        rows[new] |= 1 << v
    return Graph(g.n + 1, tuple(rows))


def _cycle_lengths(c: ClassSpec, upto: int) -> list[int]:
    if c.id == CYCLES_AT_LEAST:
        return list(range(c.k, upto + 1))
    return [c.k] if c.k <= upto else []


@lru_cache(maxsize=None)
def _trees(n: int) -> dict[str, Entry]:
    if n == 1:
        return dict([_canon_entry(Graph.empty(1))])
    parents = _trees(n - 1)
    cands = [_with_new_vertex(e.graph, [v]) for e in parents.values() for v in range(n - 1)]
    return _dedup(cands, 1)


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> dict[str, Entry]:
    if n == 1:
        return dict([_canon_entry(Graph.empty(1))])
    parents = _connected_graphs(n - 1)
    cands = []
    for e in parents.values():
        for nb in range(1, 1 << (n - 1)):
            cands.append(_with_new_vertex(e.graph, [v for v in range(n - 1) if nb >> v & 1]))
    return _dedup(cands, 1)


@lru_cache(maxsize=None)
def _cycle_trees(c: ClassSpec, n: int) -> dict[str, Entry]:
    """Connected bridged-cycle members on exactly n vertices."""
    cands = [Graph.cycle(n)] if n in _cycle_lengths(c, n) else []
    for length in _cycle_lengths(c, n):
        m = n - length
        if m < 3:
            continue
        for e in _cycle_trees(c, m).values():
            ring = disjoint_union([e.graph, Graph.cycle(length)])
            cands.extend(add_edge(ring, v, m) for v in range(m))
    return _dedup(cands, 1)


def _connected_entries(c: ClassSpec, n: int) -> dict[str, Entry]:
    if c.id == FORESTS:
        return _trees(n)
    if c.id == ALL_GRAPHS:
        return _connected_graphs(n)
    return _cycle_trees(c, n)


def enumerate_connected(c: ClassSpec, n: int) -> UnlabelledSet:
    check_cap(c, n)
    return _sorted_set(n, c, _connected_entries(c, n))


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


@lru_cache(maxsize=None)
def _all_entries(c: ClassSpec, n: int, jobs: int = 1) -> dict[str, Entry]:
    cands = []
    for parts in _partitions(n):
        choices = []
        for size in sorted(set(parts)):
            pool = [e.graph for e in _connected_entries(c, size).values()]
            choices.append(list(combinations_with_replacement(pool, parts.count(size))))
        for pick in product(*choices):
            cands.append(disjoint_union([g for group in pick for g in group]))
    found = _dedup(cands, jobs)
    if len(found) != len(cands):
        raise AssertionError(f"multiset composition produced duplicates for {c} at n={n}")
    return found


def enumerate_all(c: ClassSpec, n: int, jobs: int = 1) -> UnlabelledSet:
    check_cap(c, n)
    return _sorted_set(n, c, _all_entries(c, n, max(1, jobs)))


def labelled_count_from_unlabelled(s: UnlabelledSet) -> int:
    total = math.factorial(s.n)
    return sum(total // e.aut for e in s.entries.values())


@lru_cache(maxsize=None)
def _rooted_codes(c: ClassSpec, n: int) -> frozenset[str]:
    codes = set()
    for e in _connected_entries(c, n).values():
        for root in range(n):
            codes.add(canonical_rooted_form(e.graph, root).key)
    return frozenset(codes)


def rooted_connected_count(c: ClassSpec, n: int) -> int:
    check_cap(c, n)
    return len(_rooted_codes(c, n))


@dataclass(frozen=True)
class CountRow:
    n: int
    unlabelled_total: int
    unlabelled_connected: int
    rooted_connected: int
    labelled_total: int
    labelled_connected: int


CSV_COLUMNS = (
    "n",
    "unlabelled_total",
    "unlabelled_connected",
    "rooted_connected",
    "labelled_total",
    "labelled_connected",
)


def count_row(c: ClassSpec, n: int, jobs: int = 1) -> CountRow:
    every = enumerate_all(c, n, jobs)
    conn = enumerate_connected(c, n)
    return CountRow(
        n=n,
        unlabelled_total=len(every),
        unlabelled_connected=len(conn),
        rooted_connected=rooted_connected_count(c, n),
        labelled_total=labelled_count_from_unlabelled(every),
        labelled_connected=labelled_count_from_unlabelled(conn),
    )


def count_table(c: ClassSpec, nmax: int, jobs: int = 1) -> list[CountRow]:
    check_cap(c, nmax)
    return [count_row(c, n, jobs) for n in range(1, nmax + 1)]


def count_table_csv(rows: list[CountRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines += [",".join(str(getattr(r, col)) for col in CSV_COLUMNS) for r in rows]
    return "\n".join(lines) + "\n"


# -- brute-force oracle ------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    row: CountRow
    members: tuple[Graph, ...]  # orbit-minimal labelled representative of each member class


def _mask_graph(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@lru_cache(maxsize=None)
def labelled_filter_oracle(c: ClassSpec, n: int) -> OracleResult:
    """Visit all ``2^(n(n-1)/2)`` labelled graphs, one permutation orbit at a time.

    Each orbit is generated by applying all ``n!`` vertex permutations to its
    smallest mask, so labelled counts are orbit sizes, unlabelled counts are
    orbit counts, and rooted classes are vertex orbits of the stabiliser.
    """
    if n < 1 or n > ORACLE_CAP:
        raise CapabilityError(f"labelled filter oracle is capped at n={ORACLE_CAP}, got {n}")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    # image_bit[p, i]: bit value of edge i after applying permutation p
    image_bit = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        pa, pb = perms[:, a], perms[:, b]
        lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
        targets = np.array([index[(int(x), int(y))] for x, y in zip(lo, hi)], dtype=np.int64)
        image_bit[:, i] = np.left_shift(1, targets)

    seen_buf = bytearray(1 << len(pairs))
    seen = np.frombuffer(seen_buf, dtype=np.uint8)
    unl_total = unl_conn = rooted = lab_total = lab_conn = 0
    members = []
    pos = 0
    while True:
        pos = seen_buf.find(0, pos)
        if pos < 0:
            break
        mask = pos
        bits = [i for i in range(len(pairs)) if mask >> i & 1]
        images = image_bit[:, bits].sum(axis=1) if bits else np.zeros(len(perms), dtype=np.int64)
        orbit = np.unique(images)
        seen[orbit] = 1
        g = _mask_graph(n, pairs, mask)
        if not contains(c, g):
            continue
        members.append(g)
        unl_total += 1
        lab_total += len(orbit)
        if g.is_connected():
            unl_conn += 1
            lab_conn += len(orbit)
            autos = perms[images == mask]
            rooted += len({frozenset(autos[:, v].tolist()) for v in range(n)})
    row = CountRow(n, unl_total, unl_conn, rooted, lab_total, lab_conn)
    return OracleResult(row, tuple(members))


def oracle_keys(result: OracleResult) -> set[str]:
    return {canonical_form(g).key for g in result.members}


def connected_members(s: UnlabelledSet) -> UnlabelledSet:
    return UnlabelledSet(s.n, s.cls, {k: e for k, e in s.entries.items() if connected_contains(s.cls, e.graph)})

