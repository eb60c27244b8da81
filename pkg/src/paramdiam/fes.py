"""Exact diameter for graphs with small feedback edge number.

Pipeline: peel degree-one vertices and pending cycles with two weight-
carrying reduction rules, decompose what is left into high-degree vertices,
maximal paths and pending cycles, then combine one BFS per high vertex with
O(length) sweeps over single paths and path pairs.

The reduction state is a :class:`WeightedDiameterInstance`: a shrinking
graph, a per-vertex weight ``pen`` recording the deepest peeled vertex
reachable through each survivor, and a scalar ``s`` holding the best
answer realized entirely inside peeled structures.  Both rules preserve
max(s, weighted diameter of the current graph).
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ContractViolationError, DisconnectedGraphError, VertexRangeError
from .graph import UNREACHABLE, Graph, _bfs_dist, is_connected

TraceSink = Callable[[dict], None] | None


class WeightedDiameterInstance:
    """Mutable reduction state: graph + pen weights + folded-away scalar s."""

    __slots__ = ("_adj", "alive", "pen", "s", "_alive_count", "n")

    def __init__(self, graph: Graph, pen: Sequence[int] | None = None, s: int = 0):
        self.n = graph.n
        self._adj: list[set[int]] = [set(nbrs) for nbrs in graph.adjacency]
        self.alive = [True] * graph.n
        self._alive_count = graph.n
        if pen is None:
            self.pen = [0] * graph.n
        else:
            if len(pen) != graph.n or any(p < 0 for p in pen):
                raise VertexRangeError("pen must assign a nonnegative int per vertex")
            self.pen = list(pen)
        if s < 0:
            raise VertexRangeError("s must be nonnegative")
        self.s = s

    @property
    def alive_count(self) -> int:
        return self._alive_count

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.alive[v]]

    def remove_vertex(self, v: int) -> None:
        for w in self._adj[v]:
            self._adj[w].discard(v)
        self._adj[v].clear()
        self.alive[v] = False
        self._alive_count -= 1

    def bfs_from(self, source: int) -> list[int]:
        """Distances over the current (reduced) graph; dead vertices -1."""
        dist = [UNREACHABLE] * self.n
        if not self.alive[source]:
            raise VertexRangeError(f"vertex {source} was already removed")
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du1 = dist[u] + 1
            for w in self._adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = du1
                    queue.append(w)
        return dist

    def compacted(self) -> tuple[Graph, list[int], list[int]]:
        """Freeze the surviving graph; returns (graph, old ids, pen per new id)."""
        order = self.alive_vertices()
        new_id = {v: i for i, v in enumerate(order)}
        adjacency = tuple(
            tuple(sorted(new_id[w] for w in self._adj[v])) for v in order
        )
        m = sum(len(a) for a in adjacency) // 2
        return Graph(len(order), adjacency, m), order, [self.pen[v] for v in order]


def weighted_diameter_oracle(inst: WeightedDiameterInstance) -> int:
    """max(s, max over pairs v != w of pen(v) + dist(v, w) + pen(w)).

    Brute force by one BFS per surviving vertex; the reference against which
    the reduction rules and case sweeps are validated.  A single surviving
    vertex yields s (the pair range is unordered and excludes v = w).
    """
    order = inst.alive_vertices()
    if not order:
        raise VertexRangeError("no vertices left")
    if len(order) == 1:
        return inst.s
    best = inst.s
    pen = inst.pen
    for i, v in enumerate(order):
        row = inst.bfs_from(v)
        for w in order[i + 1:]:
            d = row[w]
            if d == UNREACHABLE:
                raise DisconnectedGraphError("instance graph is not connected")
            cand = pen[v] + d + pen[w]
            if cand > best:
                best = cand
    return best


def max_weighted_pair_cyclic(
    positions: Sequence[int], weights: Sequence[int], cycle_len: int
) -> int | None:
    """Max over pairs p != q of w_p + w_q + min(|Δ|, L - |Δ|) in O(len).

    ``positions`` are strictly increasing ints in [0, cycle_len); Δ is the
    position difference.  Rotating sweep: for each entry, the candidates at
    forward distance at most L//2 form a sliding window whose maximum of
    (weight + position) is kept in a monotonic deque.  Returns None with
    fewer than two entries.
    """
    k = len(positions)
    if k < 2:
        return None
    half = cycle_len // 2
    ext_pos = list(positions) + [p + cycle_len for p in positions]
    best: int | None = None
    dq: deque[int] = deque()  # ext indices, keys weight+ext_pos decreasing
    r = 1
    for i in range(k):
        lo = positions[i]
        hi = lo + half
        if r < i + 1:
            r = i + 1
        while r < i + k and ext_pos[r] <= hi:
            key = weights[r % k] + ext_pos[r]
            while dq and weights[dq[-1] % k] + ext_pos[dq[-1]] <= key:
                dq.pop()
            dq.append(r)
            r += 1
        while dq and ext_pos[dq[0]] <= lo:
            dq.popleft()
        if dq:
            j = dq[0]
            cand = weights[i] + (weights[j % k] + ext_pos[j] - lo)
            if best is None or cand > best:
                best = cand
    return best


# ---------------------------------------------------------------------------
# Reduction rules


def apply_rr1(inst: WeightedDiameterInstance, u: int, trace: TraceSink = None) -> None:
    """Remove a degree-one vertex, folding its pen weight into the neighbor."""
    if not inst.alive[u] or inst.degree(u) != 1:
        raise ContractViolationError(f"vertex {u} is not a live degree-one vertex")
    (v,) = inst.neighbors(u)
    inst.s = max(inst.s, inst.pen[u] + inst.pen[v] + 1)
    inst.pen[v] = max(inst.pen[u] + 1, inst.pen[v])
    inst.remove_vertex(u)
    if trace is not None:
        trace({
            "rule": "degree-one",
            "removed": u,
            "anchor": v,
            "s": inst.s,
            "pen_anchor": inst.pen[v],
        })


def apply_rr2(
    inst: WeightedDiameterInstance, cycle: Sequence[int], trace: TraceSink = None
) -> None:
    """Remove a pending cycle (anchor-first vertex sequence), keeping the anchor.

    Folds the weighted diameter of the cycle into s and the best
    (pen + cycle distance) into the anchor's pen.
    """
    a = len(cycle)
    if a < 3 or len(set(cycle)) != a:
        raise ContractViolationError("pending cycle must list at least 3 distinct vertices")
    x0 = cycle[0]
    for idx, v in enumerate(cycle):
        if not inst.alive[v]:
            raise ContractViolationError(f"cycle vertex {v} was already removed")
        nxt = cycle[(idx + 1) % a]
        if nxt not in inst.neighbors(v):
            raise ContractViolationError(f"cycle edge ({v}, {nxt}) missing")
        if idx > 0 and inst.degree(v) != 2:
            raise ContractViolationError(f"interior vertex {v} has degree != 2")
    pens = [inst.pen[v] for v in cycle]
    inner = max_weighted_pair_cyclic(range(a), pens, a)
    assert inner is not None
    inst.s = max(inst.s, inner)
    reach = max(min(k, a - k) + pens[k] for k in range(a))
    inst.pen[x0] = max(inst.pen[x0], reach)
    for v in cycle[1:]:
        inst.remove_vertex(v)
    if trace is not None:
        trace({
            "rule": "pending-cycle",
            "anchor": x0,
            "removed": list(cycle[1:]),
            "s": inst.s,
            "pen_anchor": inst.pen[x0],
        })


def _rr1_exhaust(inst: WeightedDiameterInstance, trace: TraceSink) -> None:
    queue = deque(
        v for v in range(inst.n) if inst.alive[v] and inst.degree(v) == 1
    )
    while queue:
        u = queue.popleft()
        if not inst.alive[u] or inst.degree(u) != 1:
            continue
        (v,) = inst.neighbors(u)
        apply_rr1(inst, u, trace)
        if inst.alive[v] and inst.degree(v) == 1:
            queue.append(v)


def _chains(degree, neighbors, vertices):
    """Shared path/cycle walker for graphs with no degree-one vertices."""
    high = [v for v in vertices if degree(v) >= 3]
    paths: list[list[int]] = []
    cycles: list[list[int]] = []
    visited: set[int] = set()
    for v in high:
        for w in sorted(neighbors(v)):
            if degree(w) >= 3:
                if v < w:
                    paths.append([v, w])
                continue
            if w in visited:
                continue
            chain = [v]
            prev, cur = v, w
            while True:
                chain.append(cur)
                if degree(cur) != 2:
                    break
                visited.add(cur)
                nxt = next(x for x in neighbors(cur) if x != prev)
                prev, cur = cur, nxt
            if chain[-1] == v:
                cycles.append(chain[:-1])
            else:
                paths.append(chain)
    for v in vertices:
        if degree(v) == 2 and v not in visited:
            # candidate bare cycle, anchored at its smallest id; the walk
            # can instead run into a leaf when the graph is not yet reduced
            chain = [v]
            visited.add(v)
            prev, cur = v, min(neighbors(v))
            is_cycle = True
            while cur != v:
                chain.append(cur)
                visited.add(cur)
                if degree(cur) != 2:
                    is_cycle = False
                    break
                nxt = next(x for x in neighbors(cur) if x != prev)
                prev, cur = cur, nxt
            if is_cycle:
                cycles.append(chain)
    return high, paths, cycles


def find_pending_cycles(inst: WeightedDiameterInstance) -> list[list[int]]:
    """All pending cycles of the current graph, each anchor-first."""
    _, _, cycles = _chains(inst.degree, inst.neighbors, inst.alive_vertices())
    return cycles


def reduce_exhaustively(inst: WeightedDiameterInstance, trace: TraceSink = None) -> None:
    """Apply both rules until neither fits: no degree-one vertex, no pending cycle.

    Removing a cycle can drop its anchor to degree one, and peeling leaves
    can merge maximal paths into new pending cycles, so the two phases
    alternate until a fixed point.
    """
    while True:
        _rr1_exhaust(inst, trace)
        if inst.alive_count <= 1:
            return
        cycles = find_pending_cycles(inst)
        if not cycles:
            return
        for cycle in cycles:
            apply_rr2(inst, cycle, trace)


# ---------------------------------------------------------------------------
# Decomposition and the three cases


@dataclass(frozen=True)
class PathCycleDecomposition:
    """Degree-based partition of a graph with no degree-one vertices.

    ``paths`` are maximal paths (both endpoints of degree >= 3, interior of
    degree 2; a plain edge between high vertices is a length-1 path).
    ``cycles`` are pending cycles, anchor first.
    """

    high: list[int] = field(default_factory=list)
    paths: list[list[int]] = field(default_factory=list)
    cycles: list[list[int]] = field(default_factory=list)


def decompose(g: Graph) -> PathCycleDecomposition:
    for v in range(g.n):
        if g.degree(v) == 1:
            raise ContractViolationError("decompose requires no degree-one vertices")
    high, paths, cycles = _chains(g.degree, g.neighbors, range(g.n))
    return PathCycleDecomposition(high, paths, cycles)


def case1_high_bfs(
    g: Graph, pen: Sequence[int], dec: PathCycleDecomposition
) -> tuple[int, dict[int, list[int]]]:
    """BFS per high vertex; best pen-weighted distance touching one, plus rows."""
    best = 0
    rows: dict[int, list[int]] = {}
    found = False
    for v in dec.high:
        row = _bfs_dist(g.adjacency, g.n, v)
        rows[v] = row
        pv = pen[v]
        for u in range(g.n):
            if u == v:
                continue
            d = row[u]
            if d == UNREACHABLE:
                raise DisconnectedGraphError("reduced graph is not connected")
            cand = pv + d + pen[u]
            if not found or cand > best:
                best = cand
                found = True
    return best, rows


def case2_same_path(pens: Sequence[int], endpoint_distance: int) -> int | None:
    """Best pen-weighted distance between two interior vertices of one path.

    ``pens[i]`` is the weight of path vertex x_i, i = 0..a.  An interior
    pair (i, j) is at distance min(j - i, i + endpoint_distance + (a - j)):
    interiors leave the path only via its endpoints, so the path plus the
    outside x_0..x_a route behave like a cycle of length a + endpoint
    distance.  None if fewer than two interior vertices.
    """
    a = len(pens) - 1
    if a < 3:
        return None
    return max_weighted_pair_cyclic(
        range(1, a), list(pens[1:a]), a + endpoint_distance
    )


def case3_path_pair(
    pens1: Sequence[int],
    pens2: Sequence[int],
    d00: int,
    d0b: int,
    da0: int,
    dab: int,
) -> int | None:
    """Best pen-weighted distance between interiors of two distinct paths.

    The four arguments are the graph distances between the path endpoints
    (x_0/x_a of the first path to y_0/y_b of the second).  Interior-to-
    interior routes must exit through one endpoint of each path, so
    D(i, j) = min over the four endpoint combinations of the summed legs.

    Sweep: with f(j)/g(j) the best continuation from y_j seen from x_0/x_a,
    the route through x_0 wins exactly when g(j) - f(j) >= 2i - a.  Sorting
    the y-interiors once by g - f splits every i into a via-x_0 zone and a
    via-x_a zone, each answered by a precomputed prefix/suffix maximum.
    """
    a = len(pens1) - 1
    b = len(pens2) - 1
    if a < 2 or b < 2:
        return None
    entries = []  # (t, pen+f, pen+g)
    for j in range(1, b):
        f = min(d00 + j, d0b + (b - j))
        g = min(da0 + j, dab + (b - j))
        entries.append((g - f, pens2[j] + f, pens2[j] + g))
    entries.sort()
    nb = len(entries)
    ts = [e[0] for e in entries]
    suffix_pf = [0] * (nb + 1)
    suffix_pf[nb] = -(1 << 62)
    for idx in range(nb - 1, -1, -1):
        suffix_pf[idx] = max(suffix_pf[idx + 1], entries[idx][1])
    prefix_pg = [-(1 << 62)] * (nb + 1)
    for idx in range(nb):
        prefix_pg[idx + 1] = max(prefix_pg[idx], entries[idx][2])
    best = None
    for i in range(1, a):
        cut = bisect_left(ts, 2 * i - a)
        cand = max(i + suffix_pf[cut], (a - i) + prefix_pg[cut])
        cand += pens1[i]
        if best is None or cand > best:
            best = cand
    return best


def solve_fes(g: Graph, trace: TraceSink = None) -> int:
    """Exact diameter via the reduction rules and the three-case analysis."""
    if g.n == 0:
        raise VertexRangeError("diameter undefined for the empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if g.n == 1:
        return 0
    inst = WeightedDiameterInstance(g)
    reduce_exhaustively(inst, trace)
    if inst.alive_count <= 1:
        return inst.s
    red, _, pen = inst.compacted()
    dec = decompose(red)
    assert not dec.cycles, "pending cycles must not survive reduction"
    s1, rows = case1_high_bfs(red, pen, dec)
    best = max(inst.s, s1)
    path_pens = []
    for path in dec.paths:
        pens = [pen[v] for v in path]
        path_pens.append(pens)
        d0a = rows[path[0]][path[-1]]
        cand = case2_same_path(pens, d0a)
        if cand is not None and cand > best:
            best = cand
    for i in range(len(dec.paths)):
        p1 = dec.paths[i]
        if len(p1) < 3:
            continue
        x0, xa = p1[0], p1[-1]
        for j in range(i + 1, len(dec.paths)):
            p2 = dec.paths[j]
            if len(p2) < 3:
                continue
            y0, yb = p2[0], p2[-1]
            cand = case3_path_pair(
                path_pens[i],
                path_pens[j],
                rows[x0][y0],
                rows[x0][yb],
                rows[xa][y0],
                rows[xa][yb],
            )
            if cand is not None and cand > best:
                best = cand
    return best
