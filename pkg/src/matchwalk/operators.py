"""Matrix-free arc-space walk operators and the vertex-space weighted adjacency.

The walk unitary on the n(n+1)-dimensional arc space is

    U = S (2 d* d - I)

where S swaps every arc with its reversal and d is the signed boundary
operator with weights w(a) = sigma(a)/sqrt(n) attached to the head of each
arc (the degree of every vertex is n).  One application of U costs one
boundary pass, one coboundary pass, one axpy and one arc permutation, i.e.
O(n^2) time and memory.  U is never materialized above n = 12: its dense
form is O(n^4) memory and exists here only as a small-instance test oracle.

Sandwiching S between boundary and coboundary gives the vertex-space matrix

    T = d S d*,

the degree-normalized signed adjacency: entries tau(uv)/n off-diagonal.

States dump/load as CSV rows ``u,v,re,im`` in arc-index order, or as raw
little-endian float64 pairs (re, im) in the same order.
"""

from __future__ import annotations

import numpy as np

from .graph import SignAssignment, SignedCompleteGraph

__all__ = [
    "arc_weights",
    "apply_shift",
    "apply_boundary",
    "apply_coboundary",
    "apply_walk",
    "apply_walk_adjoint",
    "weighted_adjacency",
    "dense_walk_matrix",
    "dump_state",
    "load_state",
]

DENSE_WALK_LIMIT = 12


def arc_weights(graph: SignedCompleteGraph, sign: SignAssignment) -> np.ndarray:
    """Boundary weights w(a): -1/sqrt(n) on marked arcs, +1/sqrt(n) otherwise."""
    return sign.sigma / np.sqrt(graph.n)


def apply_shift(graph: SignedCompleteGraph, state: np.ndarray) -> np.ndarray:
    """Swap the amplitude of every arc with that of its reversal (S; S^2 = I)."""
    return state[graph.inverse]


def apply_boundary(
    graph: SignedCompleteGraph, sign: SignAssignment, state: np.ndarray
) -> np.ndarray:
    """Collapse an arc state to the vertex vector (d psi)(v) = sum w(a) psi(a)
    over arcs with head v."""
    weighted = arc_weights(graph, sign) * state
    nv = graph.num_vertices
    if np.iscomplexobj(weighted):
        return np.bincount(
            graph.terminus, weights=weighted.real, minlength=nv
        ) + 1j * np.bincount(graph.terminus, weights=weighted.imag, minlength=nv)
    return np.bincount(graph.terminus, weights=weighted, minlength=nv)


def apply_coboundary(
    graph: SignedCompleteGraph, sign: SignAssignment, f: np.ndarray
) -> np.ndarray:
    """Spread a vertex vector back onto arcs: (d* f)(a) = w(a) f(head(a))."""
    return arc_weights(graph, sign) * f[graph.terminus]


def apply_walk(
    graph: SignedCompleteGraph, sign: SignAssignment, state: np.ndarray
) -> np.ndarray:
    """One step of the walk unitary U = S (2 d* d - I), matrix-free."""
    f = apply_boundary(graph, sign, state)
    reflected = 2.0 * apply_coboundary(graph, sign, f) - state
    return reflected[graph.inverse]


def apply_walk_adjoint(
    graph: SignedCompleteGraph, sign: SignAssignment, state: np.ndarray
) -> np.ndarray:
    """One step of U* = (2 d* d - I) S; both factors are involutions."""
    swapped = state[graph.inverse]
    f = apply_boundary(graph, sign, swapped)
    return 2.0 * apply_coboundary(graph, sign, f) - swapped


def weighted_adjacency(
    graph: SignedCompleteGraph, sign: SignAssignment
) -> np.ndarray:
    """Dense (n+1)x(n+1) matrix T = d S d*: tau(uv)/n off-diagonal, 0 diagonal."""
    n = graph.n
    T = (np.ones((n + 1, n + 1)) - np.eye(n + 1)) / n
    for u, v in graph.matching:
        T[u, v] = T[v, u] = -1.0 / n
    return T


def dense_walk_matrix(
    graph: SignedCompleteGraph, sign: SignAssignment
) -> np.ndarray:
    """Explicitly assembled U for small-instance oracle checks (n <= 12 only)."""
    if graph.n > DENSE_WALK_LIMIT:
        raise ValueError(
            f"dense walk matrix is restricted to n <= {DENSE_WALK_LIMIT}, got n={graph.n}"
        )
    num = graph.num_arcs
    d = np.zeros((graph.num_vertices, num))
    d[graph.terminus, np.arange(num)] = arc_weights(graph, sign)
    reflection = 2.0 * (d.T @ d) - np.eye(num)
    swap = np.eye(num)[graph.inverse]
    return swap @ reflection


def dump_state(
    state: np.ndarray,
    graph: SignedCompleteGraph,
    path: str,
    fmt: str = "csv",
) -> None:
    """Write an arc state for debugging; see the module docstring for formats."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (graph.num_arcs,):
        raise ValueError(f"state length {state.shape} != arc count {graph.num_arcs}")
    if fmt == "csv":
        lines = ["u,v,re,im"]
        for i in range(graph.num_arcs):
            lines.append(
                f"{graph.origin[i]},{graph.terminus[i]},"
                f"{state[i].real:.17g},{state[i].imag:.17g}"
            )
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    elif fmt == "binary":
        flat = np.empty(2 * graph.num_arcs)
        flat[0::2] = state.real
        flat[1::2] = state.imag
        with open(path, "wb") as fh:
            fh.write(flat.astype("<f8").tobytes())
    else:
        raise ValueError(f"unknown format {fmt!r}")


def load_state(path: str, graph: SignedCompleteGraph, fmt: str = "csv") -> np.ndarray:
    """Read back a state written by :func:`dump_state`."""
    if fmt == "csv":
        state = np.zeros(graph.num_arcs, dtype=complex)
        with open(path) as fh:
            header = fh.readline()
            if header.strip() != "u,v,re,im":
                raise ValueError(f"unexpected state header {header!r}")
            for line in fh:
                u, v, re, im = line.strip().split(",")
                state[graph.arc_index(int(u), int(v))] = float(re) + 1j * float(im)
        return state
    if fmt == "binary":
        with open(path, "rb") as fh:
            flat = np.frombuffer(fh.read(), dtype="<f8")
        if flat.size != 2 * graph.num_arcs:
            raise ValueError(
                f"file holds {flat.size // 2} amplitudes, expected {graph.num_arcs}"
            )
        return flat[0::2] + 1j * flat[1::2]
    raise ValueError(f"unknown format {fmt!r}")
