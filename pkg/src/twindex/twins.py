"""Twin classes, the reduced graph, and the composition reconstruction.

Two vertices are twins when ``N(u) \\ {v} == N(v) \\ {u}``: false twins share
open neighborhoods, true twins share closed ones. The relation is an
equivalence; each class induces either a clique or an edgeless subgraph, and
the whole graph is recovered as a generalized composition of those class
subgraphs over the reduced graph of class representatives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ReconstructionMismatch
from .graph import (
    CompositionSpec,
    Graph,
    generalized_composition,
    induced_subgraph,
    new_graph,
)


class ClassKind(enum.Enum):
    COMPLETE = "complete"
    EMPTY = "empty"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class TwinDecomposition:
    """Partition of a graph into twin classes plus the reduced graph.

    ``classes`` are sorted tuples of vertex indices, ordered by their minimum
    member; ``representatives[i] == min(classes[i])``. ``reduced`` is the
    subgraph induced by the representatives, re-indexed ``0..k-1`` so class
    ``i`` corresponds to reduced vertex ``i``.
    """

    source: Graph
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    kinds: tuple[ClassKind, ...]
    reduced: Graph

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self, v: int) -> int:
        """Index of the twin class containing vertex ``v``."""
        return self._class_index[v]

    @property
    def _class_index(self) -> dict[int, int]:
        idx = getattr(self, "_class_index_cache", None)
        if idx is None:
            idx = {v: i for i, cls in enumerate(self.classes) for v in cls}
            object.__setattr__(self, "_class_index_cache", idx)
        return idx


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True iff ``N(u) \\ {v} == N(v) \\ {u}`` (every vertex twins itself)."""
    nu = g.neighbors(u)
    nv = g.neighbors(v)
    if u == v:
        return True
    return nu - {v} == nv - {u}


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def twin_partition(g: Graph) -> TwinDecomposition:
    """Compute the twin classes of ``g`` and its reduced graph.

    Vertices are bucketed twice, by open neighborhood ``N(v)`` (false twins)
    and by closed neighborhood ``N[v]`` (true twins), and the two bucketings
    are merged with a union-find. This avoids quadratic pairwise testing; the
    pairwise predicate :func:`are_twins` serves as the oracle in tests.
    """
    n = g.n
    uf = _UnionFind(n)
    open_buckets: dict[frozenset[int], int] = {}
    closed_buckets: dict[frozenset[int], int] = {}
    for v in range(n):
        nv = g.adjacency[v]
        first = open_buckets.setdefault(nv, v)
        if first != v:
            uf.union(first, v)
        closed = nv | {v}
        first = closed_buckets.setdefault(closed, v)
        if first != v:
            uf.union(first, v)

    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(uf.find(v), []).append(v)
    classes = tuple(tuple(sorted(ms)) for _, ms in sorted(members.items()))
    representatives = tuple(c[0] for c in classes)
    kinds = tuple(_classify(g, c) for c in classes)
    reduced, _ = induced_subgraph(g, representatives)
    return TwinDecomposition(g, classes, representatives, kinds, reduced)


def _classify(g: Graph, cls: tuple[int, ...]) -> ClassKind:
    if len(cls) == 1:
        return ClassKind.SINGLETON
    pairs = [(u, v) for i, u in enumerate(cls) for v in cls[i + 1 :]]
    present = sum(1 for u, v in pairs if g.has_edge(u, v))
    if present == len(pairs):
        return ClassKind.COMPLETE
    if present == 0:
        return ClassKind.EMPTY
    raise ReconstructionMismatch(
        f"class {cls} induces a mixed subgraph; twin relation violated"
    )


def recompose(d: TwinDecomposition) -> Graph:
    """Rebuild the source graph as ``reduced[class subgraphs]``.

    The composition lays blocks out in class order; the result is relabeled
    back to the source indexing and must equal ``d.source`` exactly. A
    mismatch raises :class:`ReconstructionMismatch` and signals a bug.
    """
    factors = []
    for cls in d.classes:
        sub, _ = induced_subgraph(d.source, cls)
        factors.append(sub)
    composed = generalized_composition(CompositionSpec(d.reduced, tuple(factors)))
    perm = [0] * d.source.n
    pos = 0
    for cls in d.classes:
        for v in cls:
            perm[pos] = v
            pos += 1
    edges = [(perm[u], perm[v]) for u, v in composed.edges()]
    rebuilt = new_graph(d.source.n, edges, d.source.labels)
    if rebuilt != d.source:
        raise ReconstructionMismatch("recomposition does not match the source graph")
    return rebuilt
