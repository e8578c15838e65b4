"""Signed complete graphs with a marked matching, and their arc structure.

The walker lives on the n(n+1) ordered arcs of the complete graph on n+1
vertices.  A matching of t vertex-disjoint edges is marked through an arc
sign: exactly one arc of each marked edge carries sigma = -1 (we fix the
low-to-high arc), every other arc carries +1.  The induced edge sign
tau(uv) = sigma(u,v) * sigma(v,u) is -1 precisely on the marked edges.

Arc indexing is frozen so that state vectors are comparable across runs:

    index(u, v) = u*n + (v if v < u else v - 1)

i.e. the n arcs leaving vertex u occupy the contiguous block [u*n, (u+1)*n),
ordered by increasing head vertex.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

from .errors import InvalidArc, MatchingTooLarge, NotAMatching

__all__ = [
    "ArcClass",
    "SignedCompleteGraph",
    "SignAssignment",
    "build_signed_complete_graph",
    "classify_arc",
    "arc_classes",
    "class_counts",
]


class ArcClass(IntEnum):
    """Partition of the arc set induced by a marked matching.

    A1  marked arcs (sigma = -1)
    A2  reversals of marked arcs
    A3  unmarked arcs with both endpoints on marked edges
    A4  head on a marked edge, tail not
    A5  tail on a marked edge, head not
    A6  neither endpoint on a marked edge
    """

    A1 = 1
    A2 = 2
    A3 = 3
    A4 = 4
    A5 = 5
    A6 = 6


class SignedCompleteGraph:
    """Complete graph on ``n + 1`` vertices plus a marked matching.

    Immutable after construction; all derived arrays are read-only and the
    object is safe for unrestricted concurrent reads.

    Attributes:
        n: every vertex has degree n; there are n+1 vertices.
        matching: tuple of t vertex pairs, each stored as (low, high).
        origin, terminus: per-arc tail/head vertex, indexed by arc index.
        inverse: permutation sending each arc index to its reversal.
        matched_mask: boolean per vertex, True on endpoints of marked edges.
    """

    def __init__(self, n: int, matching: tuple[tuple[int, int], ...] = ()):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        pairs = tuple((min(u, v), max(u, v)) for u, v in matching)
        for u, v in pairs:
            if u == v:
                raise NotAMatching(f"edge ({u},{v}) is a self-loop")
            if not (0 <= u <= n and 0 <= v <= n):
                raise NotAMatching(f"edge ({u},{v}) outside vertex range 0..{n}")
        endpoints = [w for p in pairs for w in p]
        if len(set(endpoints)) != len(endpoints):
            raise NotAMatching(f"pairs {pairs} share an endpoint")
        if 2 * len(pairs) > n + 1:
            raise MatchingTooLarge(f"t={len(pairs)} exceeds floor((n+1)/2) for n={n}")

        self.n = int(n)
        self.matching = pairs
        self.t = len(pairs)
        self.num_vertices = n + 1
        self.num_arcs = n * (n + 1)

        block = np.tile(np.arange(n, dtype=np.int64), n + 1)
        self.origin = np.repeat(np.arange(n + 1, dtype=np.int64), n)
        self.terminus = block + (block >= self.origin)
        self.inverse = self.terminus * n + self.origin - (self.origin > self.terminus)
        self.matched_mask = np.zeros(n + 1, dtype=bool)
        if endpoints:
            self.matched_mask[endpoints] = True
        for a in (self.origin, self.terminus, self.inverse, self.matched_mask):
            a.setflags(write=False)

    def arc_index(self, u: int, v: int) -> int:
        """Frozen bijection from ordered pairs (u, v), u != v, to [0, n(n+1))."""
        if u == v or not (0 <= u <= self.n and 0 <= v <= self.n):
            raise InvalidArc(f"({u},{v}) is not an arc of the graph")
        return u * self.n + (v if v < u else v - 1)

    def arc_endpoints(self, index: int) -> tuple[int, int]:
        """Inverse of :meth:`arc_index`, returning (tail, head)."""
        if not (0 <= index < self.num_arcs):
            raise InvalidArc(f"arc index {index} out of range")
        return int(self.origin[index]), int(self.terminus[index])

    def __repr__(self) -> str:
        return f"SignedCompleteGraph(n={self.n}, matching={self.matching})"


class SignAssignment:
    """Arc sign sigma and the induced edge sign tau for a marked matching.

    sigma is -1 on exactly one arc per marked edge (the low-to-high arc, so
    that sigma(a) = -1 implies sigma of the reversed arc is +1) and +1
    elsewhere.  All observable quantities are invariant under which of the
    two arcs carries the -1.
    """

    def __init__(self, graph: SignedCompleteGraph):
        self.graph = graph
        sigma = np.ones(graph.num_arcs, dtype=np.int8)
        marked = np.array(
            [graph.arc_index(u, v) for u, v in graph.matching], dtype=np.int64
        )
        if marked.size:
            sigma[marked] = -1
        self.sigma = sigma
        self.marked_arc_indices = marked
        for a in (self.sigma, self.marked_arc_indices):
            a.setflags(write=False)

    def tau(self, u: int, v: int) -> int:
        """Edge sign tau(uv) = sigma(u,v) * sigma(v,u); -1 iff uv is marked."""
        g = self.graph
        return int(self.sigma[g.arc_index(u, v)] * self.sigma[g.arc_index(v, u)])

    def __repr__(self) -> str:
        return f"SignAssignment(marked_arcs={len(self.marked_arc_indices)})"


def build_signed_complete_graph(
    n: int,
    t: int = 0,
    placement: str = "canonical",
    pairs: tuple[tuple[int, int], ...] | None = None,
    seed: int | None = None,
) -> tuple[SignedCompleteGraph, SignAssignment]:
    """Build the graph and its sign for a marked t-matching.

    Placements:
        canonical: pair vertices (2i, 2i+1) for i < t.  The closed-form
            spectra and eigenvectors assume this labeling.
        explicit:  use ``pairs`` as given (t is inferred).
        random:    choose 2t distinct vertices with a seeded generator and
            pair them consecutively; used to exercise label-invariance.

    Raises:
        MatchingTooLarge: if t > floor((n+1)/2).
        NotAMatching: if explicit pairs share an endpoint.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if pairs is not None:
        placement = "explicit"
    if placement == "explicit":
        if pairs is None:
            raise ValueError("explicit placement needs pairs")
        chosen = tuple(tuple(p) for p in pairs)
    elif placement == "canonical":
        if 2 * t > n + 1:
            raise MatchingTooLarge(f"t={t} exceeds floor((n+1)/2) for n={n}")
        chosen = tuple((2 * i, 2 * i + 1) for i in range(t))
    elif placement == "random":
        if 2 * t > n + 1:
            raise MatchingTooLarge(f"t={t} exceeds floor((n+1)/2) for n={n}")
        rng = np.random.default_rng(seed)
        verts = rng.choice(n + 1, size=2 * t, replace=False)
        chosen = tuple((int(verts[2 * i]), int(verts[2 * i + 1])) for i in range(t))
    else:
        raise ValueError(f"unknown placement {placement!r}")
    graph = SignedCompleteGraph(n, chosen)
    return graph, SignAssignment(graph)


def classify_arc(
    graph: SignedCompleteGraph, sign: SignAssignment, arc: tuple[int, int]
) -> ArcClass:
    """Classify a single arc (tail, head) into its partition class."""
    u, v = arc
    index = graph.arc_index(u, v)  # raises InvalidArc on bad input
    if sign.sigma[index] == -1:
        return ArcClass.A1
    if sign.sigma[graph.inverse[index]] == -1:
        return ArcClass.A2
    head_in = bool(graph.matched_mask[v])
    tail_in = bool(graph.matched_mask[u])
    if head_in and tail_in:
        return ArcClass.A3
    if head_in:
        return ArcClass.A4
    if tail_in:
        return ArcClass.A5
    return ArcClass.A6


def arc_classes(graph: SignedCompleteGraph, sign: SignAssignment) -> np.ndarray:
    """Vectorized classification of every arc; values are ArcClass codes."""
    cls = np.full(graph.num_arcs, int(ArcClass.A6), dtype=np.int8)
    head_in = graph.matched_mask[graph.terminus]
    tail_in = graph.matched_mask[graph.origin]
    cls[head_in & ~tail_in] = ArcClass.A4
    cls[~head_in & tail_in] = ArcClass.A5
    cls[head_in & tail_in] = ArcClass.A3
    marked = sign.marked_arc_indices
    if marked.size:
        cls[marked] = ArcClass.A1
        cls[graph.inverse[marked]] = ArcClass.A2
    return cls


def class_counts(
    graph: SignedCompleteGraph, sign: SignAssignment
) -> dict[ArcClass, int]:
    """Closed-form class sizes (t, t, 4t(t-1), 2t(n+1-2t), 2t(n+1-2t), rest).

    The counts sum to n(n+1); brute-force enumeration via
    :func:`classify_arc` is the test oracle for these formulas.
    """
    n, t = graph.n, graph.t
    side = 2 * t * (n + 1 - 2 * t)
    return {
        ArcClass.A1: t,
        ArcClass.A2: t,
        ArcClass.A3: 4 * t * (t - 1),
        ArcClass.A4: side,
        ArcClass.A5: side,
        ArcClass.A6: n * n + n + 4 * t * t - 4 * n * t - 2 * t,
    }
