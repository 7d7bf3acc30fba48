"""Exact chromatic number by saturation-ordered backtracking.

The decision kernel `k_coloring` restricts the first fresh vertex to colours
0..(max used + 1), the standard symmetry cut; without it order-9 campaigns
are not feasible.  `chromatic_number` brackets with a greedy clique below
and DSATUR above, then decides k-colourability upward.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, _bits


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    witness: tuple[int, ...]


def _bipartition(rows, n: int) -> Optional[list[int]]:
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in _bits(rows[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def k_coloring(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """A proper k-colouring of g, or None if none exists."""
    n = g.n
    rows = g.rows
    if k < 0:
        raise ValueError(f"colour count must be >= 0, got {k}")
    if k == 0:
        return None
    if all(r == 0 for r in rows):
        return (0,) * n
    if k == 1:
        return None
    if k >= n:
        return tuple(range(n))
    if k == 2:
        two = _bipartition(rows, n)
        return tuple(two) if two is not None else None

    color = [-1] * n
    adj_masks = [0] * n  # bitmask of colours used by coloured neighbours
    degs = [r.bit_count() for r in rows]

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1)
        for v in range(n):
            if color[v] == -1:
                key = (adj_masks[v].bit_count(), degs[v])
                if key > best_key:
                    best_key = key
                    best_v = v
        return best_v

    def assign(used: int) -> bool:
        v = pick()
        if v == -1:
            return True
        limit = min(k - 1, used)  # colours 0..used, capped at k-1
        forbidden = adj_masks[v]
        for c in range(limit + 1):
            if (forbidden >> c) & 1:
                continue
            color[v] = c
            touched = []
            bit = 1 << c
            for u in _bits(rows[v]):
                if color[u] == -1 and not adj_masks[u] & bit:
                    adj_masks[u] |= bit
                    touched.append(u)
            if assign(max(used, c + 1)):
                return True
            color[v] = -1
            for u in touched:
                adj_masks[u] &= ~bit
        return False

    if assign(0):
        return tuple(color)
    return None


def is_k_colorable(g: Graph, k: int) -> bool:
    return k_coloring(g, k) is not None


def _greedy_clique(rows, n: int) -> int:
    # greedy from every start vertex; the bound only prunes, exactness not needed
    best = 1 if n else 0
    for start in range(n):
        clique = 1 << start
        cand = rows[start]
        while cand:
            pick_v = -1
            pick_score = -1
            for v in _bits(cand):
                score = (rows[v] & cand).bit_count()
                if score > pick_score:
                    pick_score = score
                    pick_v = v
            clique |= 1 << pick_v
            cand &= rows[pick_v]
        best = max(best, clique.bit_count())
    return best


def _dsatur(rows, n: int) -> list[int]:
    color = [-1] * n
    adj_masks = [0] * n
    degs = [r.bit_count() for r in rows]
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] == -1),
            key=lambda u: (adj_masks[u].bit_count(), degs[u], -u),
        )
        c = 0
        while (adj_masks[v] >> c) & 1:
            c += 1
        color[v] = c
        bit = 1 << c
        for u in _bits(rows[v]):
            if color[u] == -1:
                adj_masks[u] |= bit
    return color


def chromatic_number(g: Graph) -> ColoringResult:
    n = g.n
    rows = g.rows
    if all(r == 0 for r in rows):
        return ColoringResult(1, (0,) * n)
    lower = max(2, _greedy_clique(rows, n))
    greedy = _dsatur(rows, n)
    upper = max(greedy) + 1
    for k in range(lower, upper):
        witness = k_coloring(g, k)
        if witness is not None:
            return ColoringResult(k, witness)
    return ColoringResult(upper, tuple(greedy))
