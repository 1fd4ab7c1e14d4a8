"""Graph families: algebraic constructions and standard parametric graphs.

The algebraic generators return a :class:`LabeledGraph`, a plain graph whose
vertices remember which group element, ring element, or ideal they came
from. Vertex order is always deterministic (element index order, or ideal
(size, elements) order), so repeated runs are bit-identical.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

from .errors import BadParameter, ImproperIdeal, LocalRingUnsupported
from .algebra import (
    FiniteGroup,
    FiniteRing,
    Ideal,
    all_ideals,
    cyclic_group,
    cyclic_subgroup,
    is_comaximal,
    jacobson_radical,
    maximal_ideals,
)
from .graph import CompositionSpec, Graph, generalized_composition, new_graph, with_labels


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with the semantic description of each vertex."""

    graph: Graph
    semantics: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "semantics", tuple(self.semantics))
        if len(self.semantics) != self.graph.n:
            raise BadParameter(
                f"{len(self.semantics)} semantics entries for {self.graph.n} vertices"
            )
        if len(set(self.semantics)) != len(self.semantics):
            raise BadParameter("vertex semantics must be unique")


def _labeled(n: int, edges, labels) -> LabeledGraph:
    return LabeledGraph(new_graph(n, edges, labels), tuple(labels))


# --- algebraic families ---------------------------------------------------------


def power_graph(g: FiniteGroup) -> LabeledGraph:
    """Power graph: distinct elements adjacent iff one is a power of the other."""
    gens = [cyclic_subgroup(g, a) for a in range(g.order)]
    edges = [
        (a, b)
        for a in range(g.order)
        for b in range(a + 1, g.order)
        if a in gens[b] or b in gens[a]
    ]
    return _labeled(g.order, edges, list(g.element_labels))


def power_graph_zn_classes(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """Predicted twin classes of the power graph of ``Z_n``, keyed by divisor.

    For each divisor ``d < n`` the class collects the elements with
    ``gcd(x, n) = d``; zero joins the ``d = 1`` class. This divisor partition
    refines (and usually equals) the graph-derived twin partition, which
    remains the authority for index computations.
    """
    if n < 2:
        raise BadParameter(f"need n >= 2, got {n}")
    classes: dict[int, list[int]] = {}
    for x in range(n):
        d = 1 if x == 0 else gcd(x, n)
        classes.setdefault(d, []).append(x)
    return [(d, tuple(sorted(classes[d]))) for d in sorted(classes)]


def zero_divisor_graph(r: FiniteRing) -> LabeledGraph:
    """Zero-divisor graph: nonzero zero divisors, adjacent iff product is zero.

    Rings without zero divisors yield the empty graph plus a warning, so
    batch pipelines over ring families keep going.
    """
    zero = r.zero
    divisors = [
        x
        for x in range(r.size)
        if x != zero and any(r.mul(x, y) == zero for y in range(r.size) if y != zero)
    ]
    if not divisors:
        warnings.warn(f"{r!r} has no nonzero zero divisors; returning the empty graph")
        return _labeled(0, [], [])
    index = {x: i for i, x in enumerate(divisors)}
    edges = [
        (index[x], index[y])
        for x in divisors
        for y in divisors
        if x < y and r.mul(x, y) == zero
    ]
    return _labeled(len(divisors), edges, [r.element_labels[x] for x in divisors])


def ideal_zero_divisor_graph(r: FiniteRing, ideal: Ideal) -> LabeledGraph:
    """Ideal-based zero-divisor graph: ``x ~ y`` iff ``x * y`` lands in the ideal.

    Vertices are the elements outside the ideal whose product with some other
    outside element falls into it. With the zero ideal this coincides with
    :func:`zero_divisor_graph`.
    """
    if ideal.ring is not r:
        raise ImproperIdeal("ideal does not belong to the given ring")
    if not ideal.is_proper():
        raise ImproperIdeal("the whole ring is not a proper ideal")
    inside = set(ideal.elements)
    outside = [x for x in range(r.size) if x not in inside]
    vertices = [x for x in outside if any(r.mul(x, y) in inside for y in outside)]
    index = {x: i for i, x in enumerate(vertices)}
    edges = [
        (index[x], index[y])
        for x in vertices
        for y in vertices
        if x < y and r.mul(x, y) in inside
    ]
    return _labeled(len(vertices), edges, [r.element_labels[x] for x in vertices])


def comaximal_ideal_graph(r: FiniteRing) -> LabeledGraph:
    """Comaximal ideal graph: proper ideals outside the Jacobson radical,
    adjacent iff their sum is the whole ring.

    Local rings are rejected (:class:`LocalRingUnsupported`): with a single
    maximal ideal every candidate vertex sits inside the radical.
    """
    if len(maximal_ideals(r)) < 2:
        raise LocalRingUnsupported(
            f"{r!r} is local; its comaximal ideal graph has no vertices"
        )
    radical = jacobson_radical(r)
    vertices = [
        i
        for i in all_ideals(r)
        if i.is_proper() and not radical.contains_ideal(i)
    ]
    edges = [
        (a, b)
        for a in range(len(vertices))
        for b in range(a + 1, len(vertices))
        if is_comaximal(r, vertices[a], vertices[b])
    ]
    return _labeled(len(vertices), edges, [i.label() for i in vertices])


# --- standard parametric families ------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise BadParameter(f"need n >= 0, got {n}")
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise BadParameter(f"need n >= 0, got {n}")
    return new_graph(n, [])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"need n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """``K_{1, n-1}``: vertex 0 is the center."""
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    return new_graph(n, [(0, v) for v in range(1, n)])


def complete_multipartite_graph(part_sizes) -> Graph:
    """Parts in the given order; all cross-part pairs adjacent."""
    parts = list(part_sizes)
    if not parts or any(p < 1 for p in parts):
        raise BadParameter(f"part sizes must be positive, got {parts}")
    spec = CompositionSpec(complete_graph(len(parts)), tuple(empty_graph(p) for p in parts))
    return generalized_composition(spec)


def wheel_graph(n: int) -> Graph:
    """Wheel on ``n + 1`` vertices, built literally as ``K_2[C_n, K_1]``."""
    if n < 3:
        raise BadParameter(f"need rim size n >= 3, got {n}")
    spec = CompositionSpec(complete_graph(2), (cycle_graph(n), complete_graph(1)))
    return generalized_composition(spec)


def power_graph_zn(n: int) -> LabeledGraph:
    """Convenience wrapper: the power graph of the cyclic group ``Z_n``."""
    return power_graph(cyclic_group(n))


def as_graph(obj: Graph | LabeledGraph) -> Graph:
    """Unwrap a :class:`LabeledGraph`, passing plain graphs through."""
    if isinstance(obj, LabeledGraph):
        return with_labels(obj.graph, obj.semantics)
    return obj


def family_graph(spec: str) -> Graph:
    """Build a graph from a compact family spec string.

    Supported forms: ``power:<group>``, ``zdg:<ring>``,
    ``izdg:<ring>:I=(<gens>)``, ``comax:<ring>``, ``multipartite:<s1,s2,...>``,
    ``wheel:<n>``, ``star:<n>``, ``complete:<n>``, ``empty:<n>``,
    ``path:<n>``, ``cycle:<n>``.
    """
    from .algebra import group_from_spec, ideal_from_spec, ring_from_spec

    kind, _, rest = spec.partition(":")
    if not rest:
        raise BadParameter(f"family spec {spec!r} needs a ':<parameters>' part")
    if kind == "power":
        return as_graph(power_graph(group_from_spec(rest)))
    if kind == "zdg":
        return as_graph(zero_divisor_graph(ring_from_spec(rest)))
    if kind == "izdg":
        ring_spec, _, ideal_spec = rest.partition(":")
        if not ideal_spec.startswith("I="):
            raise BadParameter(f"izdg spec needs ':I=(...)', got {spec!r}")
        ring = ring_from_spec(ring_spec)
        ideal = ideal_from_spec(ring, ideal_spec[2:])
        return as_graph(ideal_zero_divisor_graph(ring, ideal))
    if kind == "comax":
        return as_graph(comaximal_ideal_graph(ring_from_spec(rest)))
    if kind == "multipartite":
        try:
            sizes = [int(s) for s in rest.split(",")]
        except ValueError:
            raise BadParameter(f"bad part sizes in {spec!r}") from None
        return complete_multipartite_graph(sizes)
    scalar_families = {
        "wheel": wheel_graph,
        "star": star_graph,
        "complete": complete_graph,
        "empty": empty_graph,
        "path": path_graph,
        "cycle": cycle_graph,
    }
    if kind in scalar_families:
        try:
            n = int(rest)
        except ValueError:
            raise BadParameter(f"bad size in {spec!r}") from None
        return scalar_families[kind](n)
    raise BadParameter(f"unknown family kind {kind!r} in {spec!r}")
