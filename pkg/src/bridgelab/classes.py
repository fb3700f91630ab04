"""Built-in graph classes: all graphs, forests, and the bridged-cycle families.

A graph belongs to ``cycles>=k`` when deleting all of its bridges leaves a
disjoint union of cycles, each of length at least ``k``. Isolated vertices
are not cycles, so every vertex must lie on a cycle. ``cycles==k`` requires
every such cycle to have length exactly ``k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from bridgelab.errors import InvalidArgument
from bridgelab.graphcore import Graph, bridges, component_masks

ALL_GRAPHS = "all_graphs"
FORESTS = "forests"
CYCLES_AT_LEAST = "cycles_at_least"
CYCLES_EXACTLY = "cycles_exactly"

_CYCLE_RE = re.compile(r"^cycles(>=|==)(\d+)$")


@dataclass(frozen=True)
class ClassSpec:
    id: str
    k: int | None = None

    def __post_init__(self):
        if self.id in (ALL_GRAPHS, FORESTS):
            if self.k is not None:
                raise InvalidArgument(f"class {self.id} takes no parameter")
        elif self.id in (CYCLES_AT_LEAST, CYCLES_EXACTLY):
            if self.k is None or self.k < 3:
                raise InvalidArgument("cycle classes need k >= 3")
        else:
            raise InvalidArgument(f"unknown class id {self.id!r}")

    @property
    def decomposable(self) -> bool:
        return True

    @property
    def is_cycle_class(self) -> bool:
        return self.id in (CYCLES_AT_LEAST, CYCLES_EXACTLY)

    def __str__(self) -> str:
        if self.id == ALL_GRAPHS:
            return "all"
        if self.id == FORESTS:
            return "forests"
        op = ">=" if self.id == CYCLES_AT_LEAST else "=="
        return f"cycles{op}{self.k}"

    @property
    def slug(self) -> str:
        """Filesystem-safe name."""
        if self.is_cycle_class:
            return f"cycles_{'ge' if self.id == CYCLES_AT_LEAST else 'eq'}{self.k}"
        return str(self)

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        text = text.strip()
        if text in ("all", ALL_GRAPHS):
            return cls(ALL_GRAPHS)
        if text == FORESTS:
            return cls(FORESTS)
        match = _CYCLE_RE.match(text)
        if match:
            op, k = match.groups()
            return cls(CYCLES_AT_LEAST if op == ">=" else CYCLES_EXACTLY, int(k))
        raise InvalidArgument(
            f"unknown class {text!r}; expected all, forests, cycles>=K or cycles==K"
        )


def all_graphs() -> ClassSpec:
    return ClassSpec(ALL_GRAPHS)


def forests() -> ClassSpec:
    return ClassSpec(FORESTS)


def cycles_at_least(k: int) -> ClassSpec:
    return ClassSpec(CYCLES_AT_LEAST, k)


def cycles_exactly(k: int) -> ClassSpec:
    return ClassSpec(CYCLES_EXACTLY, k)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g))


def _bridgeless_cycle_lengths(g: Graph) -> list[int] | None:
    """Cycle lengths left after deleting bridges, or None if the rest is not all cycles."""
    core = g.remove_edges(bridges(g))
    if any(core.degree(v) != 2 for v in range(core.n)):
        return None
    return [mask.bit_count() for mask in component_masks(core)]


def contains(c: ClassSpec, g: Graph) -> bool:
    if c.id == ALL_GRAPHS:
        return True
    if c.id == FORESTS:
        return is_forest(g)
    lengths = _bridgeless_cycle_lengths(g)
    if lengths is None:
        return False
    if c.id == CYCLES_AT_LEAST:
        return all(length >= c.k for length in lengths)
    return all(length == c.k for length in lengths)


def connected_contains(c: ClassSpec, g: Graph) -> bool:
    return g.is_connected() and contains(c, g)


def builtin_classes(k: int = 3) -> list[ClassSpec]:
    return [all_graphs(), forests(), cycles_at_least(k), cycles_exactly(k)]
