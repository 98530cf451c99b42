"""Immutable simple-graph core: text formats, structural queries, generators.

Vertices are integers 0..n-1.  Two text formats are supported: a plain
edge list ("n m" header, then one "u v" line per edge, '#' comments) and
DIMACS ("p edge n m" header, then "e u v" lines, 1-based).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed graph text input."""


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Construction rejects self-loops, duplicate edges, and out-of-range
    endpoints.  Instances are immutable by convention (tuples throughout)
    and safe to share across threads.
    """

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.m = len(seen)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self._adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def bipartition(self) -> list[int] | None:
        """Two-color the vertices (0/1 per side), or None if an odd cycle exists."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        return side

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Parsing and serialization


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: "n m" header then m lines "u v" (0-based)."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError(f"line {lineno}: bad header {line!r}")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"header promises {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS: "p edge n m" header then "e u v" lines (1-based)."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(f"line {lineno}: expected 'p edge n m'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphParseError(f"line {lineno}: expected 'p edge n m'") from None
        elif parts[0] == "e":
            if header is None:
                raise GraphParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: expected 'e u v'") from None
            if u < 1 or v < 1:
                raise GraphParseError(f"line {lineno}: DIMACS vertices are 1-based")
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if header is None:
        raise GraphParseError("missing 'p edge n m' line")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"header promises {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dimacs":
        return to_dimacs(g)
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# Structural queries


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    Runs a breadth-first search from every vertex; the first non-tree edge
    seen at depth d closes a cycle of length at most 2d+1, so each search
    stops once it can no longer improve the best cycle found so far.
    """
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def girth_mad_bound(g: int) -> Fraction:
    """Density ceiling 2g/(g-2) implied by girth g in the planar setting.

    A planar graph with girth at least g has maximum average degree
    strictly below this value (the caller is responsible for planarity).
    """
    if g < 3:
        raise ValueError("girth bound requires g >= 3")
    return Fraction(2 * g, g - 2)


# ---------------------------------------------------------------------------
# Generators


def gen_complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """Cycle on n vertices, edges (i, i+1 mod n)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_star(n_leaves: int) -> Graph:
    """Star with center 0 and n_leaves pendant vertices."""
    if n_leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])


def gen_kstar(n: int) -> Graph:
    """Complete graph on n hubs with every edge subdivided once.

    Hubs occupy indices 0..n-1 (degree n-1 each); the subdivision vertex of
    hub pair (i, j), i < j, sits at index n + rank(i, j) in lexicographic
    pair order (degree 2).  Total: n(n+1)/2 vertices, n(n-1) edges.
    """
    if n < 1:
        raise ValueError("gen_kstar needs n >= 1")
    edges = []
    s = n
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, s))
            edges.append((j, s))
            s += 1
    return Graph(n * (n + 1) // 2, edges)


def subdivide(h: Graph) -> Graph:
    """Replace every edge of h by a path of length two through a new vertex.

    Original vertices keep their indices; the fresh vertex for the k-th
    edge of h (in sorted edge order) is h.n + k.
    """
    edges = []
    s = h.n
    for u, v in h.edges():
        edges.append((u, s))
        edges.append((v, s))
        s += 1
    return Graph(h.n + h.m, edges)


def gen_cycle_with_leaves(n: int, leaf_counts: Iterable[int]) -> Graph:
    """Cycle on n vertices (3 | n) with pendant leaves on every third vertex.

    leaf_counts has one entry per attachment point; the j-th entry adds that
    many leaves at cycle vertex 3j+2 (the 1-based positions 3, 6, ..., n).
    Leaves are appended after the cycle vertices.
    """
    if n < 3 or n % 3 != 0:
        raise ValueError("cycle length must be a positive multiple of 3")
    counts = list(leaf_counts)
    if len(counts) != n // 3:
        raise ValueError(f"expected {n // 3} leaf counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise ValueError("leaf counts must be non-negative")
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for j, c in enumerate(counts):
        host = 3 * j + 2
        for _ in range(c):
            edges.append((host, nxt))
            nxt += 1
    return Graph(nxt, edges)
