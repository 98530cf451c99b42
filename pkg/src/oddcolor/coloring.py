"""Odd-coloring state and verification.

An odd coloring is a proper vertex coloring in which every non-isolated
vertex sees some color an odd number of times on its neighborhood.
PartialColoring tracks, for each vertex, the multiplicity of every color
among its currently colored neighbors, so the set of odd-multiplicity
colors is available in O(1) while colorings are built incrementally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


class PaletteExhaustedError(RuntimeError):
    """All k colors were forbidden; a color-count bound was violated upstream."""


@dataclass(frozen=True)
class Violation:
    """One reason a total coloring fails to be an odd coloring.

    kind is "improper-edge" (where = the offending edge, u < v) or
    "no-odd-color" (where = a non-isolated vertex whose neighborhood color
    classes are all even).
    """

    kind: str
    where: tuple[int, int] | int


def choose_color(avoid: Iterable[int], k: int) -> int:
    """Smallest color in 1..k not contained in avoid."""
    forbidden = set(avoid)
    for c in range(1, k + 1):
        if c not in forbidden:
            return c
    raise PaletteExhaustedError(f"all {k} colors forbidden by {sorted(forbidden)}")


class PartialColoring:
    """Mutable partial proper coloring with per-vertex neighbor-color parity.

    Colors are positive integers 1..k; 0 means uncolored.  Properness is
    enforced at every assign.  The parity table of a vertex always reflects
    the multiset of colors on its currently colored neighbors, including
    vertices that were re-colored after deletion/replay, which is exactly
    the "current coloring" a colorer must consult before each assignment.
    """

    def __init__(self, graph: Graph, k: int):
        if k < 1:
            raise ValueError("need at least one color")
        self.graph = graph
        self.k = k
        self.color = [0] * graph.n
        self._counts: list[dict[int, int]] = [{} for _ in range(graph.n)]
        self._odd: list[set[int]] = [set() for _ in range(graph.n)]

    def is_colored(self, v: int) -> bool:
        return self.color[v] != 0

    def assign(self, v: int, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ValueError(f"color {c} out of range 1..{self.k}")
        if self.color[v] != 0:
            raise ValueError(f"vertex {v} already colored")
        for w in self.graph.neighbors(v):
            if self.color[w] == c:
                raise ValueError(f"color {c} on {v} clashes with neighbor {w}")
        self.color[v] = c
        for w in self.graph.neighbors(v):
            counts = self._counts[w]
            counts[c] = counts.get(c, 0) + 1
            odd = self._odd[w]
            if c in odd:
                odd.discard(c)
            else:
                odd.add(c)

    def unassign(self, v: int) -> None:
        c = self.color[v]
        if c == 0:
            raise ValueError(f"vertex {v} is not colored")
        self.color[v] = 0
        for w in self.graph.neighbors(v):
            counts = self._counts[w]
            counts[c] -= 1
            if counts[c] == 0:
                del counts[c]
            odd = self._odd[w]
            if c in odd:
                odd.discard(c)
            else:
                odd.add(c)

    def parity(self, v: int) -> dict[int, int]:
        """Copy of v's color -> multiplicity table over colored neighbors."""
        return dict(self._counts[v])

    def odd_color_set(self, v: int) -> set[int]:
        """Colors with odd multiplicity among v's currently colored neighbors."""
        return set(self._odd[v])

    def unique_odd_color(self, v: int) -> int | None:
        """The single odd-multiplicity color on v's neighborhood, if exactly one.

        With zero or two-plus odd colors there is nothing to protect: any
        color placed on a new neighbor flips one parity class and leaves at
        least one odd class intact, so avoid sets include this value only
        when it is defined.
        """
        odd = self._odd[v]
        if len(odd) == 1:
            return next(iter(odd))
        return None

    def is_complete(self) -> bool:
        return all(c != 0 for c in self.color)


def is_odd_coloring(g: Graph, colors: Iterable[int]) -> tuple[bool, list[Violation]]:
    """Check a total assignment; returns (ok, all violations found).

    Violations list improper edges first (sorted), then vertices lacking an
    odd color (sorted).  Raises ValueError if any vertex is uncolored.
    """
    cols = list(colors)
    if len(cols) != g.n:
        raise ValueError(f"expected {g.n} colors, got {len(cols)}")
    for v, c in enumerate(cols):
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"vertex {v} is uncolored or has invalid color {c!r}")
    violations: list[Violation] = []
    for u, v in g.edges():
        if cols[u] == cols[v]:
            violations.append(Violation("improper-edge", (u, v)))
    for v in range(g.n):
        nbs = g.neighbors(v)
        if not nbs:
            continue
        counts: dict[int, int] = {}
        for w in nbs:
            counts[cols[w]] = counts.get(cols[w], 0) + 1
        if not any(c % 2 == 1 for c in counts.values()):
            violations.append(Violation("no-odd-color", v))
    return (not violations, violations)


# ---------------------------------------------------------------------------
# Coloring files: {"k": int, "colors": [c_1, ..., c_n]} with 1-based colors.


def coloring_to_json(colors: Iterable[int], k: int, **extra: object) -> str:
    payload: dict[str, object] = {"k": k, "colors": list(colors)}
    payload.update(extra)
    return json.dumps(payload)


def coloring_from_json(text: str) -> tuple[int, list[int]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid coloring JSON: {exc}") from None
    if not isinstance(payload, dict) or "k" not in payload or "colors" not in payload:
        raise ValueError('coloring JSON must be an object with "k" and "colors"')
    k = payload["k"]
    cols = payload["colors"]
    if not isinstance(k, int) or not isinstance(cols, list):
        raise ValueError('coloring JSON must map "k" to an int and "colors" to a list')
    if not all(isinstance(c, int) for c in cols):
        raise ValueError("colors must be integers")
    return k, cols
