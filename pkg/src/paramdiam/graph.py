"""Immutable simple-graph substrate and BFS-based primitives.

Graphs are undirected, unweighted, simple, with vertices 0..n-1.  All
distances are plain Python integers; ``UNREACHABLE`` (-1) marks vertices in
other components.  A :class:`Graph` never changes after construction, so it
can be shared freely between threads; every function here is pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListParseError,
    SelfLoopError,
    VertexRangeError,
)

UNREACHABLE = -1


class Graph:
    """Undirected simple graph in compact adjacency form.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``.  Use
    :func:`from_edge_list` to build a validated instance.
    """

    __slots__ = ("n", "m", "adjacency", "_masks")

    def __init__(self, n: int, adjacency: tuple[tuple[int, ...], ...], m: int):
        self.n = n
        self.m = m
        self.adjacency = adjacency
        self._masks: list[int] | None = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        if len(a) > len(self.adjacency[v]):
            a, u, v = self.adjacency[v], v, u
        return v in a

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    @property
    def neighbor_masks(self) -> list[int]:
        """Adjacency as bitmasks (int per vertex), computed lazily."""
        if self._masks is None:
            masks = []
            for nbrs in self.adjacency:
                m = 0
                for w in nbrs:
                    m |= 1 << w
                masks.append(m)
            self._masks = masks
        return self._masks

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceRow:
    """Single-source distances; ``dist[v] == UNREACHABLE`` if disconnected."""

    source: int
    dist: tuple[int, ...]


def from_edge_list(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a validated Graph from an edge list over vertices 0..n-1.

    Rejects self-loops, duplicate (including symmetric) edges and
    out-of-range endpoints with distinct error types.
    """
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    adjacency: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adjacency), len(seen))


def _bfs_dist(adjacency: Sequence[Sequence[int]], n: int, source: int) -> list[int]:
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du1
                queue.append(w)
    return dist


def bfs(g: Graph, source: int) -> DistanceRow:
    """Exact unweighted shortest-path distances from ``source``."""
    if not (0 <= source < g.n):
        raise VertexRangeError(f"source {source} outside 0..{g.n - 1}")
    return DistanceRow(source, tuple(_bfs_dist(g.adjacency, g.n, source)))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in _bfs_dist(g.adjacency, g.n, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def eccentricity(g: Graph, v: int) -> int:
    row = _bfs_dist(g.adjacency, g.n, v)
    ecc = max(row)
    if UNREACHABLE in row:
        raise DisconnectedGraphError("graph is not connected")
    return ecc


def naive_diameter(g: Graph) -> int:
    """Diameter by one BFS per vertex; the reference oracle for all solvers."""
    if g.n == 0:
        raise VertexRangeError("diameter undefined for the empty graph")
    require_connected(g)
    best = 0
    for v in range(g.n):
        best = max(best, max(_bfs_dist(g.adjacency, g.n, v)))
    return best


def connected_components(g: Graph) -> list[int]:
    """Component labels: labels[v] == labels[u] iff u, v connected.

    Labels are consecutive integers starting at 0, assigned in order of the
    smallest vertex of each component.
    """
    labels = [-1] * g.n
    label = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = label
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if labels[w] == -1:
                    labels[w] = label
                    queue.append(w)
        label += 1
    return labels


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for acyclic graphs.

    BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
    at most dist[u] + dist[w] + 1, and for a vertex on a shortest cycle
    this bound is tight.
    """
    best: int | None = None
    for v in range(g.n):
        dist = [UNREACHABLE] * g.n
        parent = [-1] * g.n
        dist[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                continue
            for w in g.adjacency[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns (subgraph, old-id order).

    New vertex i corresponds to the i-th smallest member of ``vertices``.
    """
    order = sorted(set(vertices))
    for v in order:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"vertex {v} outside 0..{g.n - 1}")
    new_id = {v: i for i, v in enumerate(order)}
    adjacency = []
    m = 0
    for v in order:
        row = tuple(sorted(new_id[w] for w in g.adjacency[v] if w in new_id))
        m += len(row)
        adjacency.append(row)
    return Graph(len(order), tuple(adjacency), m // 2), order


# ---------------------------------------------------------------------------
# Edge-list text interchange: '#' comments, "n m" header, then m "u v" lines.

def parse_edge_list(text: str) -> Graph:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise EdgeListParseError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise EdgeListParseError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise EdgeListParseError(
            f"header declares {m} edges but {len(lines) - 1} edge lines found"
        )
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v' edge line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListParseError(f"non-integer edge line {ln!r}") from exc
    return from_edge_list(edges, n)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        for ln in comment.splitlines():
            out.append(f"# {ln}")
    out.append(f"{g.n} {g.m}")
    for u, v in g.edges():
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def load_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(g: Graph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment))
