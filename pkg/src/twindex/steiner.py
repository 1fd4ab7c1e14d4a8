"""Exact Steiner distances and brute-force index computation.

``steiner_distance`` runs the Dreyfus-Wagner dynamic program over
(terminal-subset, anchor-vertex) states; ``steiner_distance_bruteforce``
minimizes over connected vertex supersets and is the independent oracle the
dynamic program and the twin-class reduction formula are validated against.
All index values are exact Python integers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

import numpy as np

from .errors import (
    BadSubsetSize,
    DisconnectedGraph,
    DisconnectedTerminals,
    EmptyTerminalSet,
    GraphTooLargeForBruteForce,
    TerminalCapExceeded,
)
from .graph import Graph, all_pairs_distances, is_connected

DP_TERMINAL_CAP = 20
BRUTE_FORCE_VERTEX_CAP = 16

# Larger than any hop count, small enough that sums of a few never overflow
# int64.
_INF = 1 << 40


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop counts as an int64 array with ``_INF`` for unreachable."""
    n = g.n
    mat = np.full((n, n), _INF, dtype=np.int64)
    for v, row in enumerate(all_pairs_distances(g)):
        for w, d in enumerate(row):
            if d != np.inf:
                mat[v, w] = d
    return mat


def _dreyfus_wagner(dist: np.ndarray, terminals: tuple[int, ...]) -> int:
    """Minimum edge count of a subtree spanning ``terminals``.

    ``dp[mask]`` is the vector over anchor vertices ``v`` of the cheapest
    tree spanning ``{terminals[i] : i in mask} | {v}``. Masks are processed
    in increasing order: merge two subtrees at the anchor, then relax through
    the exact distance matrix (one pass suffices because hop counts satisfy
    the triangle inequality).
    """
    k = len(terminals)
    if k == 1:
        return 0
    if k == 2:
        return int(dist[terminals[0], terminals[1]])
    n = dist.shape[0]
    full = (1 << k) - 1
    dp = np.full((full + 1, n), _INF, dtype=np.int64)
    for i, t in enumerate(terminals):
        dp[1 << i] = dist[t]
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        best = np.full(n, _INF, dtype=np.int64)
        sub = (mask - 1) & mask
        while sub:
            rest = mask ^ sub
            if sub <= rest:
                np.minimum(best, dp[sub] + dp[rest], out=best)
            sub = (sub - 1) & mask
        dp[mask] = (best[:, None] + dist).min(axis=0)
    return int(dp[full].min())


def _validated_terminals(g: Graph, terminals: Iterable[int]) -> tuple[int, ...]:
    ts = tuple(sorted(set(terminals)))
    if not ts:
        raise EmptyTerminalSet("terminal set must be non-empty")
    for t in ts:
        g._check_vertex(t)
    return ts


def _check_reachable(dist: np.ndarray, ts: tuple[int, ...]) -> None:
    t0 = ts[0]
    for t in ts[1:]:
        if dist[t0, t] >= _INF:
            raise DisconnectedTerminals(
                f"terminals {t0} and {t} lie in different components"
            )


def steiner_distance(
    g: Graph,
    terminals: Iterable[int],
    *,
    terminal_cap: int = DP_TERMINAL_CAP,
    _dist: np.ndarray | None = None,
) -> int:
    """Exact Steiner distance of a terminal set (edges of the smallest subtree).

    A single terminal costs 0; two terminals cost their shortest-path
    distance. Raises :class:`DisconnectedTerminals` when the terminals span
    several components and :class:`TerminalCapExceeded` beyond
    ``terminal_cap`` (the DP holds ``2^|S| * n`` states).
    """
    ts = _validated_terminals(g, terminals)
    if len(ts) > terminal_cap:
        raise TerminalCapExceeded(
            f"{len(ts)} terminals exceed the cap of {terminal_cap}"
        )
    dist = distance_matrix(g) if _dist is None else _dist
    _check_reachable(dist, ts)
    return _dreyfus_wagner(dist, ts)


def steiner_distance_bruteforce(g: Graph, terminals: Iterable[int]) -> int:
    """Independent Steiner-distance oracle: scan connected vertex supersets.

    The smallest subtree containing ``S`` has vertex set ``W`` with
    ``G[W]`` connected and ``|W| - 1`` edges, so the minimum of ``|W| - 1``
    over connected supersets is the Steiner distance. Exponential in ``n``;
    capped at ``n <= 16``.
    """
    if g.n > BRUTE_FORCE_VERTEX_CAP:
        raise GraphTooLargeForBruteForce(
            f"brute force needs n <= {BRUTE_FORCE_VERTEX_CAP}, got {g.n}"
        )
    ts = _validated_terminals(g, terminals)
    base = 0
    for t in ts:
        base |= 1 << t
    others = [v for v in range(g.n) if not base & (1 << v)]
    best: int | None = None
    for extra_bits in range(1 << len(others)):
        mask = base
        for i, v in enumerate(others):
            if extra_bits >> i & 1:
                mask |= 1 << v
        size = mask.bit_count()
        if best is not None and size - 1 >= best:
            continue
        if _induced_connected(g, mask):
            best = size - 1
    if best is None:
        raise DisconnectedTerminals("terminals lie in different components")
    return best


def _induced_connected(g: Graph, mask: int) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            bit = 1 << w
            if mask & bit and not seen & bit:
                seen |= bit
                stack.append(w)
    return seen == mask


def _validate_index_args(g: Graph, m: int) -> None:
    if not 1 <= m <= g.n:
        raise BadSubsetSize(f"subset size {m} not in [1, {g.n}]")
    if not is_connected(g):
        raise DisconnectedGraph("index computation requires a connected graph")


def steiner_wiener_naive(
    g: Graph,
    m: int,
    *,
    threads: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> int:
    """m-Steiner Wiener index by summing Steiner distances of every m-subset.

    This is the definition, evaluated literally: one Dreyfus-Wagner query per
    subset. ``progress(done, total)`` is invoked periodically when given.
    ``threads > 1`` splits the subset stream over a thread pool; the result
    is the same integer regardless.
    """
    _validate_index_args(g, m)
    if m == 1:
        return 0
    dist = distance_matrix(g)
    if m == 2:
        # Same queries, specialised: d({u, v}) is the matrix entry.
        return int(np.triu(dist, 1).sum())
    subsets = list(itertools.combinations(range(g.n), m))
    total = len(subsets)

    def run_chunk(chunk: list[tuple[int, ...]], report: bool) -> int:
        acc = 0
        for done, s in enumerate(chunk, start=1):
            acc += _dreyfus_wagner(dist, s)
            if report and progress is not None and done % 1000 == 0:
                progress(done, total)
        return acc

    if threads <= 1 or total < 2:
        value = run_chunk(subsets, True)
    else:
        chunks = [subsets[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            value = sum(pool.map(lambda c: run_chunk(c, False), chunks))
    if progress is not None:
        progress(total, total)
    return value


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs."""
    if not is_connected(g):
        raise DisconnectedGraph("the Wiener index requires a connected graph")
    rows = all_pairs_distances(g)
    return sum(int(rows[u][v]) for u in range(g.n) for v in range(u + 1, g.n))


def all_steiner_distances(g: Graph) -> dict[frozenset[int], int]:
    """Steiner distance of every non-empty vertex subset (test helper).

    One Dreyfus-Wagner run with the full vertex set as terminals yields the
    answer for all ``2^n - 1`` subsets at once; only sensible for tiny
    graphs.
    """
    if g.n > BRUTE_FORCE_VERTEX_CAP:
        raise GraphTooLargeForBruteForce(
            f"all-subsets table needs n <= {BRUTE_FORCE_VERTEX_CAP}, got {g.n}"
        )
    if not is_connected(g):
        raise DisconnectedGraph("all-subsets table requires a connected graph")
    n = g.n
    dist = distance_matrix(g)
    full = (1 << n) - 1
    dp = np.full((full + 1, n), _INF, dtype=np.int64)
    for v in range(n):
        dp[1 << v] = dist[v]
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        best = np.full(n, _INF, dtype=np.int64)
        sub = (mask - 1) & mask
        while sub:
            rest = mask ^ sub
            if sub <= rest:
                np.minimum(best, dp[sub] + dp[rest], out=best)
            sub = (sub - 1) & mask
        dp[mask] = (best[:, None] + dist).min(axis=0)
    out: dict[frozenset[int], int] = {}
    for mask in range(1, full + 1):
        members = frozenset(v for v in range(n) if mask >> v & 1)
        out[members] = int(dp[mask].min())
    return out
