"""Exact diameter via hub distance fingerprints and bounded-depth probes.

Phase 1 BFSes from a hub set H (everything outside H has small degree) and
fingerprints each non-hub vertex by its exact distances to H.  Phase 2
maintains a diameter candidate e, starting at the largest distance seen in
the hub tables, and certifies it: a fingerprint pair whose best via-hub
route exceeds e forces a depth-e BFS in G - H, and a missing vertex of the
probed fingerprint proves a pair at distance e + 1.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Callable, Sequence

from .errors import DisconnectedGraphError, InvalidModulatorError, VertexRangeError
from .graph import UNREACHABLE, Graph, _bfs_dist, induced_subgraph, is_connected
from .params import h_index, hub_set

TraceSink = Callable[[dict], None] | None


def truncated_bfs_count(
    g_minus_h: Graph, v: int, depth: int, types: Sequence[tuple[int, ...]]
) -> Counter:
    """Count fingerprints among vertices within ``depth`` of v in G - H.

    ``types[u]`` is the fingerprint of vertex u of the hub-free graph; v
    itself is counted (distance 0).
    """
    if not (0 <= v < g_minus_h.n):
        raise VertexRangeError(f"vertex {v} outside 0..{g_minus_h.n - 1}")
    dist = [UNREACHABLE] * g_minus_h.n
    dist[v] = 0
    queue = deque([v])
    counts: Counter = Counter()
    counts[types[v]] += 1
    while queue:
        u = queue.popleft()
        if dist[u] == depth:
            continue
        du1 = dist[u] + 1
        for w in g_minus_h.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du1
                counts[types[w]] += 1
                queue.append(w)
    return counts


def solve_hd(
    g: Graph, hubs: set[int] | None = None, trace: TraceSink = None
) -> int:
    """Exact diameter; the hub set defaults to the h highest-degree vertices.

    Every vertex outside ``hubs`` must have degree at most ``h_index(g)``
    when a custom set is supplied.
    """
    if g.n == 0:
        raise VertexRangeError("diameter undefined for the empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if hubs is None:
        hubs = hub_set(g)
    else:
        h = h_index(g)
        for v in hubs:
            if not (0 <= v < g.n):
                raise InvalidModulatorError(f"hub {v} outside 0..{g.n - 1}")
        for v in range(g.n):
            if v not in hubs and g.degree(v) > h:
                raise InvalidModulatorError(
                    f"vertex {v} outside the hub set has degree above h_index"
                )
    hub_list = sorted(hubs)
    if not hub_list:
        # connected and edgeless: a single vertex
        return 0

    rows = {x: _bfs_dist(g.adjacency, g.n, x) for x in hub_list}
    e = max(max(row) for row in rows.values())

    non_hubs = [v for v in range(g.n) if v not in hubs]
    if not non_hubs:
        return e
    sub, order = induced_subgraph(g, non_hubs)
    sub_id = {old: i for i, old in enumerate(order)}
    vec_of = [
        tuple(rows[x][old] for x in hub_list) for old in order
    ]
    totals: Counter = Counter(vec_of)

    type_list = list(totals)
    while True:
        shortfall = False
        probes = 0
        for i, old in enumerate(order):
            vec_v = vec_of[i]
            pending = [
                t for t in type_list
                if min(a + b for a, b in zip(vec_v, t)) > e
            ]
            if not pending:
                continue
            probes += 1
            reached = truncated_bfs_count(sub, i, e, vec_of)
            for t in pending:
                if reached.get(t, 0) != totals[t]:
                    # some vertex of this fingerprint is at distance >= e + 1
                    if trace is not None:
                        trace({
                            "e": e,
                            "probes": probes,
                            "vertex": old,
                            "type": list(t),
                        })
                    shortfall = True
                    break
            if shortfall:
                break
        if not shortfall:
            if trace is not None:
                trace({"e": e, "probes": probes, "vertex": None, "type": None})
            return e
        e += 1
