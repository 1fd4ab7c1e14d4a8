"""Immutable simple undirected graphs over dense 0-based vertex indices.

The :class:`Graph` value is the substrate for everything else in the package:
twin decomposition, Steiner distances, and the algebraic graph generators all
consume and produce it. Vertices are integers ``0..n-1``; semantic names
(group elements, ring elements, ideals) ride along as per-vertex string
labels so the algorithms stay label-agnostic.

Distances between vertices in different components are reported as the
dedicated marker :data:`UNREACHABLE` (``math.inf``), never as a sentinel
integer.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityMismatch, ParseError, SelfLoopRejected, VertexOutOfRange

UNREACHABLE = math.inf

GRAPH_FORMATS = ("edgelist", "json", "dot")


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(v) for v in range(n))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: symmetric loop-free adjacency sets.

    Construct through :func:`new_graph` (or the parsers/generators), which
    validate indices and deduplicate edges. Instances are immutable and
    hashable; equality is structural over ``(n, edges, labels)``.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of ``v``; never contains ``v`` itself."""
        self._check_vertex(v)
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
        )

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")


@dataclass(frozen=True)
class CompositionSpec:
    """A base graph plus one factor graph per base vertex.

    :func:`generalized_composition` evaluates it by replacing vertex ``i`` of
    the base with the whole factor ``factors[i]`` and joining two blocks
    completely whenever their base vertices are adjacent.
    """

    base: Graph
    factors: tuple[Graph, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) != self.base.n:
            raise ArityMismatch(
                f"base has {self.base.n} vertices but {len(self.factors)} factors given"
            )


def new_graph(
    n: int,
    edges: Iterable[tuple[int, int]] = (),
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Duplicate edges (in either orientation) collapse to one. Raises
    :class:`VertexOutOfRange` for endpoints outside ``[0, n)`` and
    :class:`SelfLoopRejected` for ``(v, v)`` pairs.
    """
    if n < 0:
        raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not 0 <= u < n:
            raise VertexOutOfRange(f"edge endpoint {u} not in [0, {n})")
        if not 0 <= v < n:
            raise VertexOutOfRange(f"edge endpoint {v} not in [0, {n})")
        if u == v:
            raise SelfLoopRejected(f"self-loop at vertex {u} rejected")
        adj[u].add(v)
        adj[v].add(u)
    if labels is None:
        labels = _default_labels(n)
    else:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise VertexOutOfRange(f"expected {n} labels, got {len(labels)}")
    return Graph(tuple(frozenset(a) for a in adj), labels)


def with_labels(g: Graph, labels: Sequence[str]) -> Graph:
    """Copy of ``g`` carrying the given per-vertex labels."""
    labels = tuple(str(s) for s in labels)
    if len(labels) != g.n:
        raise VertexOutOfRange(f"expected {g.n} labels, got {len(labels)}")
    return Graph(g.adjacency, labels)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    """Open neighborhood of ``v`` in ``g``."""
    return g.neighbors(v)


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one connected component.

    The empty graph and the one-vertex graph are connected.
    """
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Hop counts from ``source``; :data:`UNREACHABLE` where no path exists."""
    g._check_vertex(source)
    dist: list[int | float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int | float]]:
    """Symmetric matrix of shortest-path hop counts (BFS from every vertex)."""
    return [bfs_distances(g, v) for v in range(g.n)]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, re-indexed ``0..k-1`` in sorted order.

    Returns the subgraph together with the mapping ``new index -> old index``.
    Labels are inherited from ``g``.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    index_of = {old: new for new, old in enumerate(keep)}
    edges = [
        (index_of[u], index_of[v])
        for u in keep
        for v in g.adjacency[u]
        if u < v and v in index_of
    ]
    labels = tuple(g.labels[v] for v in keep)
    return new_graph(len(keep), edges, labels), tuple(keep)


def permuted(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel ``g`` by ``perm`` (``perm[old] = new``); labels move along."""
    if sorted(perm) != list(range(g.n)):
        raise VertexOutOfRange("perm must be a permutation of 0..n-1")
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    labels: list[str] = [""] * g.n
    for old, new in enumerate(perm):
        labels[new] = g.labels[old]
    return new_graph(g.n, edges, labels)


def generalized_composition(spec: CompositionSpec) -> Graph:
    """Evaluate ``base[factors[0], ..., factors[k-1]]``.

    The vertex set is the disjoint union of the factor vertex sets, blocks
    laid out in base-vertex order. Two vertices are adjacent iff they sit in
    the same block and are adjacent in its factor, or they sit in different
    blocks whose base vertices are adjacent.
    """
    base, factors = spec.base, spec.factors
    offsets = []
    total = 0
    for f in factors:
        offsets.append(total)
        total += f.n
    edges: list[tuple[int, int]] = []
    for i, f in enumerate(factors):
        off = offsets[i]
        edges.extend((off + u, off + v) for u, v in f.edges())
    for i, j in base.edges():
        for p in range(factors[i].n):
            for q in range(factors[j].n):
                edges.append((offsets[i] + p, offsets[j] + q))
    return new_graph(total, edges)


# --- text formats -----------------------------------------------------------
#
# edge-list: first line is the vertex count; each later non-empty line holds
#   two space-separated 0-based indices; '#' starts a comment line.
# json: {"n": int, "edges": [[a, b], ...], "labels": [str, ...]}.
# dot: render-only undirected "graph G { ... }".


def parse_graph(text: str | bytes, fmt: str = "edgelist") -> Graph:
    """Parse a graph from its textual form. Formats: ``edgelist``, ``json``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "json":
        return _parse_json(text)
    raise ParseError(f"unknown parse format {fmt!r} (expected 'edgelist' or 'json')")


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected a single vertex count", lineno, 1)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[0]!r}", lineno, 1) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno, 1)
            continue
        if len(fields) != 2:
            raise ParseError("expected two vertex indices", lineno, 1)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"bad vertex index in {line!r}", lineno, 1) from None
        if not 0 <= u < n:
            raise ParseError(f"vertex {u} out of range [0, {n})", lineno, 1)
        if not 0 <= v < n:
            col = 1 + len(fields[0]) + 1
            raise ParseError(f"vertex {v} out of range [0, {n})", lineno, col)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, 1)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count line")
    return new_graph(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if "n" not in obj or not isinstance(obj["n"], int):
        raise ParseError('missing or non-integer "n" field')
    n = obj["n"]
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be an array of pairs')
    edges = []
    for i, pair in enumerate(raw_edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) for x in pair)
        ):
            raise ParseError(f"edge #{i} is not a pair of integers")
        edges.append((pair[0], pair[1]))
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError('"labels" must be an array of strings')
        if len(labels) != n:
            raise ParseError(f'"labels" has {len(labels)} entries, expected {n}')
    try:
        return new_graph(n, edges, labels)
    except (VertexOutOfRange, SelfLoopRejected) as exc:
        raise ParseError(str(exc)) from None


def render_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Deterministic textual form. Formats: ``edgelist``, ``json``, ``dot``.

    Edges always appear with the smaller endpoint first, in lexicographic
    order, so rendering is stable and ``parse_graph`` round-trips exactly.
    """
    if fmt == "edgelist":
        lines = [str(g.n)]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt == "json":
        obj = {"n": g.n, "edges": [list(e) for e in g.edges()], "labels": list(g.labels)}
        return json.dumps(obj, separators=(", ", ": ")) + "\n"
    if fmt == "dot":
        lines = ["graph G {"]
        for v in range(g.n):
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        lines.extend(f"  {u} -- {v};" for u, v in g.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ParseError(f"unknown render format {fmt!r} (expected 'edgelist', 'json' or 'dot')")
