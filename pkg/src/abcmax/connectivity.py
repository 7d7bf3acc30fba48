"""Exact edge- and vertex-connectivity via unit-capacity augmenting paths.

Both functions are exact; speed only needs to be adequate for enumeration
scale.  Disconnected graphs return 0 (campaign filters rely on the value
rather than an error), and complete graphs use the n-1 convention for
vertex connectivity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, _bits, is_connected


@dataclass(frozen=True)
class ConnectivityResult:
    edge_connectivity: int
    vertex_connectivity: int
    min_edge_cut: Optional[tuple[tuple[int, int], ...]] = None
    min_vertex_cut: Optional[tuple[int, ...]] = None


def _edge_flow(rows, n: int, s: int, t: int, limit: int):
    """Max number of edge-disjoint s-t paths, capped at `limit`.

    Returns (flow, residual) where residual[u] maps v -> remaining capacity.
    """
    res = [{v: 1 for v in _bits(rows[u])} for u in range(n)]
    flow = 0
    while flow < limit:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for v, c in res[u].items():
                if c > 0 and parent[v] == -1:
                    parent[v] = u
                    if v == t:
                        break
                    queue.append(v)
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            res[u][v] -= 1
            res[v][u] = res[v].get(u, 0) + 1
            v = u
        flow += 1
    return flow, res


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose deletion disconnects g (0 for K_1)."""
    n = g.n
    if n == 1 or not is_connected(g):
        return 0
    best = min(r.bit_count() for r in g.rows)  # lambda <= min degree
    for t in range(1, n):
        flow, _ = _edge_flow(g.rows, n, 0, t, best)
        if flow < best:
            best = flow
            if best == 1:
                break
    return best


def _vertex_flow(rows, n: int, s: int, t: int, limit: int):
    """Max internally vertex-disjoint s-t paths for non-adjacent s, t.

    Works on the split graph: node 2v is v_in, 2v+1 is v_out; the in->out
    arc carries capacity 1 except at the terminals.
    """
    big = n
    res: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        res[2 * v][2 * v + 1] = big if v in (s, t) else 1
        for u in _bits(rows[v]):
            res[2 * v + 1][2 * u] = big
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = [-1] * (2 * n)
        parent[src] = src
        queue = deque([src])
        while queue and parent[dst] == -1:
            u = queue.popleft()
            for v, c in res[u].items():
                if c > 0 and parent[v] == -1:
                    parent[v] = u
                    if v == dst:
                        break
                    queue.append(v)
        if parent[dst] == -1:
            break
        v = dst
        while v != src:
            u = parent[v]
            res[u][v] -= 1
            res[v][u] = res[v].get(u, 0) + 1
            v = u
        flow += 1
    return flow, res


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; n-1 for complete graphs by convention."""
    n = g.n
    if n == 1 or not is_connected(g):
        return 0
    full = (1 << n) - 1
    if all(g.rows[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    best = n - 1
    for s in range(n):
        non_adj = full & ~g.rows[s] & ~(1 << s) & ~((1 << (s + 1)) - 1)
        for t in _bits(non_adj):
            flow, _ = _vertex_flow(g.rows, n, s, t, best)
            if flow < best:
                best = flow
                if best == 1:
                    return 1
    return best


def connectivity_profile(g: Graph) -> ConnectivityResult:
    """Both connectivities plus witness cuts realizing them (when they exist)."""
    n = g.n
    lam = edge_connectivity(g)
    kap = vertex_connectivity(g)
    edge_cut = None
    vertex_cut = None
    if lam == 0:
        edge_cut = ()
        vertex_cut = () if n > 1 else None
        return ConnectivityResult(lam, kap, edge_cut, vertex_cut)
    # rerun the minimizing edge flow without a cap to read the cut off the residual
    for t in range(1, n):
        flow, res = _edge_flow(g.rows, n, 0, t, n * n)
        if flow == lam:
            reach = _residual_reachable(res, 0, n)
            edge_cut = tuple(
                (min(u, v), max(u, v))
                for u in _bits(reach)
                for v in _bits(g.rows[u] & ~reach)
            )
            break
    full = (1 << n) - 1
    if kap < n - 1:
        done = False
        for s in range(n):
            if done:
                break
            non_adj = full & ~g.rows[s] & ~(1 << s) & ~((1 << (s + 1)) - 1)
            for t in _bits(non_adj):
                flow, res = _vertex_flow(g.rows, n, s, t, n * n)
                if flow == kap:
                    reach = _residual_reachable(res, 2 * s + 1, 2 * n)
                    vertex_cut = tuple(
                        v for v in range(n)
                        if (reach >> (2 * v)) & 1 and not (reach >> (2 * v + 1)) & 1
                    )
                    done = True
                    break
    return ConnectivityResult(lam, kap, edge_cut, vertex_cut)


def _residual_reachable(res, start: int, size: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for v, c in res[u].items():
            if c > 0 and not (seen >> v) & 1:
                seen |= 1 << v
                stack.append(v)
    return seen
