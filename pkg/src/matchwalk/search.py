"""The quantum search protocol on the arc space.

The two walk eigenvectors phi_{+-theta} lifted from the top eigenvalue of T
span an invariant plane.  Their combinations

    beta_plus  = (phi_+ + phi_-) / sqrt(2)      (real, peaked on marked arcs)
    beta_minus = (phi_+ - phi_-) / sqrt(2)      (imaginary, nearly uniform)

are constant on each arc class: with kappa = 1/sqrt(n c),

    beta_plus  = kappa/sin(theta) * (-rho(1+cos th), rho(1+cos th),
                 rho(1-cos th), rho-cos th, 1-rho cos th, 1-cos th) on A1..A6
    beta_minus = kappa * (-i rho on A1, A3, A5;  +i rho on A2;  -i on A4, A6).

beta_minus overlaps the uniform state up to o(1), so the protocol starts
there, runs k_f = floor(pi / (2 theta)) walk steps to rotate onto (a phase
times) beta_plus, and reads the finding probability

    FP(k) = sum over marked edges of |psi_k(a)|^2 + |psi_k(a^-1)|^2.

Amplitude amplification turns a success probability FP_n at cost k_f into
an expected total cost k_total = k_f * sqrt(1 / FP_n); only this cost
formula is used, the amplification circuit itself is never simulated.
FP_n is measured from the simulated state at k_f rather than taken from
its asymptotic approximation; the closed-form approximation

    FP ~ 2t |rho (1 + cos theta)|^2 / (n c sin^2 theta)

is available separately for comparison plots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateLift, ZeroMatching
from .graph import SignAssignment, SignedCompleteGraph, arc_classes
from .operators import apply_walk
from .spectral import closed_form_spectrum

__all__ = [
    "SearchTrace",
    "uniform_state",
    "search_basis",
    "finding_probability",
    "run_search",
    "closed_form_finding_probability",
    "total_complexity",
]


@dataclass(frozen=True)
class SearchTrace:
    """Per-step finding probabilities plus the derived search complexity.

    ``probs[k]`` is FP(k) for k = 0..steps from the chosen initial state;
    ``fp_at_kf`` is FP(k_f) (NaN when the trace stops short of k_f) and
    ``k_total`` the amplitude-amplification cost k_f * sqrt(1 / FP(k_f)).
    ``overlap`` is |<uniform, beta_minus>| regardless of the initial state.
    """

    n: int
    t: int
    initial: str
    theta: float
    k_f: int
    probs: np.ndarray
    fp_at_kf: float
    peak_step: int
    k_total: float
    overlap: float


def uniform_state(graph: SignedCompleteGraph) -> np.ndarray:
    """Unit state with amplitude 1/sqrt(n(n+1)) on every arc."""
    return np.full(
        graph.num_arcs, 1.0 / np.sqrt(graph.num_arcs), dtype=complex
    )


def search_basis(
    graph: SignedCompleteGraph, sign: SignAssignment
) -> tuple[np.ndarray, np.ndarray]:
    """(beta_plus, beta_minus) from the closed-form class constants.

    Raises:
        ZeroMatching: if the graph has no marked edge.
        DegenerateLift: if the top eigenvalue is 1 in modulus (n=1 perfect
            matching), where the invariant plane collapses.
    """
    if graph.t == 0:
        raise ZeroMatching("search needs at least one marked edge")
    summary = closed_form_spectrum(graph.n, graph.t)
    if abs(summary.lam_max) >= 1.0 - 1e-14:
        raise DegenerateLift(f"top eigenvalue {summary.lam_max} has no lift")
    rho, c, theta = summary.rho, summary.c, summary.theta
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    kappa = 1.0 / np.sqrt(graph.n * c)
    # lookup tables indexed by ArcClass code 1..6 (slot 0 unused)
    plus_values = (
        kappa
        / sin_t
        * np.array(
            [
                0.0,
                -rho * (1 + cos_t),
                rho * (1 + cos_t),
                rho * (1 - cos_t),
                rho - cos_t,
                1 - rho * cos_t,
                1 - cos_t,
            ]
        )
    )
    minus_values = (
        1j * kappa * np.array([0.0, -rho, rho, -rho, -1.0, -rho, -1.0])
    )
    classes = arc_classes(graph, sign)
    return plus_values[classes].astype(complex), minus_values[classes]


def finding_probability(
    graph: SignedCompleteGraph, sign: SignAssignment, state: np.ndarray
) -> float:
    """Total probability on marked edges: both arcs of each marked edge."""
    marked = sign.marked_arc_indices
    if marked.size == 0:
        return 0.0
    both = np.concatenate([marked, graph.inverse[marked]])
    return float(np.abs(state[both]).__pow__(2).sum())


def run_search(
    graph: SignedCompleteGraph,
    sign: SignAssignment,
    steps: int | None = None,
    initial: str = "basis",
) -> SearchTrace:
    """Evolve the search and record the finding probability at every step.

    Args:
        steps: number of walk applications; defaults to 2 * k_f so the peak
            and the turnaround are both visible.
        initial: "basis" starts from beta_minus (the protocol's effective
            initial state); "uniform" starts from the true uniform state.
    """
    if initial not in ("basis", "uniform"):
        raise ValueError(f"unknown initial state {initial!r}")
    summary = closed_form_spectrum(graph.n, graph.t)  # validates feasibility
    if graph.t == 0:
        raise ZeroMatching("search needs at least one marked edge")
    _, beta_minus = search_basis(graph, sign)
    u = uniform_state(graph)
    overlap = float(abs(np.vdot(u, beta_minus)))
    k_f = int(np.floor(np.pi / (2.0 * summary.theta)))
    if steps is None:
        steps = 2 * k_f
    psi = beta_minus if initial == "basis" else u
    probs = np.empty(steps + 1)
    probs[0] = finding_probability(graph, sign, psi)
    for k in range(1, steps + 1):
        psi = apply_walk(graph, sign, psi)
        probs[k] = finding_probability(graph, sign, psi)
    fp_at_kf = probs[k_f] if k_f <= steps else float("nan")
    k_total = (
        k_f * np.sqrt(1.0 / fp_at_kf) if fp_at_kf and not np.isnan(fp_at_kf) else float("nan")
    )
    return SearchTrace(
        n=graph.n,
        t=graph.t,
        initial=initial,
        theta=summary.theta,
        k_f=k_f,
        probs=probs,
        fp_at_kf=float(fp_at_kf),
        peak_step=int(np.argmax(probs)),
        k_total=float(k_total),
        overlap=overlap,
    )


def closed_form_finding_probability(n: int, t: int) -> float:
    """Asymptotic-formula FP at the rotated state (comparison mode only)."""
    summary = closed_form_spectrum(n, t)
    if t == 0:
        raise ZeroMatching("finding probability needs t >= 1")
    rho, c, theta = summary.rho, summary.c, summary.theta
    amp = rho * (1.0 + np.cos(theta)) / (np.sqrt(n * c) * np.sin(theta))
    return float(2 * t * amp * amp)


def total_complexity(
    n: int, t: int, method: str = "simulate"
) -> tuple[int, float, float]:
    """(k_f, FP_n, k_total) for the canonical t-matching on n+1 vertices.

    ``method="simulate"`` (default) measures FP_n as FP(k_f) of the actual
    evolution; ``method="closed_form"`` substitutes the asymptotic formula.
    """
    if t < 1:
        raise ZeroMatching("search complexity needs t >= 1")
    if method == "simulate":
        from .graph import build_signed_complete_graph

        summary = closed_form_spectrum(n, t)
        k_f = int(np.floor(np.pi / (2.0 * summary.theta)))
        graph, sign = build_signed_complete_graph(n, t)
        trace = run_search(graph, sign, steps=k_f)
        return trace.k_f, trace.fp_at_kf, trace.k_total
    if method == "closed_form":
        summary = closed_form_spectrum(n, t)
        k_f = int(np.floor(np.pi / (2.0 * summary.theta)))
        fp = closed_form_finding_probability(n, t)
        return k_f, fp, float(k_f * np.sqrt(1.0 / fp))
    raise ValueError(f"unknown method {method!r}")
