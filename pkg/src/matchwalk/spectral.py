"""Closed-form spectra of the weighted adjacency and their lift to walk phases.

For a marked t-matching on the complete graph with n+1 vertices, with
s = n - 4t + 2 and Delta = (n+1)^2 + 4s, the vertex-space matrix T has the
closed-form spectrum (eigenvalues scaled by 1/n, multiplicities in braces):

    t = 0:             {1}^1, {-1/n}^n
    0 < 2t < n+1:      {-3/n}^{t-1}, {a/n}^1, {-1/n}^{n-2t}, {1/n}^t, {b/n}^1
    2t = n+1 (perfect): {-3/n}^{t-1}, {1/n}^t, {b/n}^1  with  b = n - 2

where a, b = (n - 3 -+ sqrt(Delta))/2.  The top eigenvalue is lam = b/n with
unit eigenvector

    f = (rho, ..., rho, 1, ..., 1) / sqrt(c),    rho repeated 2t times,

rho = (-(s+1) + sqrt(Delta)) / (4t) and c = 2t rho^2 + n + 1 - 2t under the
canonical labeling (matched vertices first).  For a perfect matching the
eigenvector is uniform, which we record as rho = 1, c = n + 1.

Each eigenvalue lam of T with |lam| < 1 lifts to the conjugate pair of walk
eigenvectors with phases +-theta, theta = arccos(lam):

    phi_{+-} = (d* f - e^{+-i theta} S d* f) / (sqrt(2) |sin theta|).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateLift, MatchingTooLarge, NonSymmetric, ZeroMatching
from .graph import SignAssignment, SignedCompleteGraph
from .operators import apply_coboundary, apply_shift

__all__ = [
    "SpectralSummary",
    "WalkEigenpair",
    "closed_form_spectrum",
    "principal_eigenvector",
    "lift_to_walk",
    "numeric_spectrum",
    "expand_eigenvalues",
]


@dataclass(frozen=True)
class SpectralSummary:
    """Eigenvalue multiset of T plus the named scalars derived from (n, t).

    ``eigenvalues`` is a sorted tuple of (value, multiplicity) with
    coinciding closed-form values merged; multiplicities sum to n+1.
    ``lam_max`` is the top eigenvalue b/n and ``theta`` its walk phase.
    """

    n: int
    t: int
    eigenvalues: tuple[tuple[float, int], ...]
    s: float
    delta: float
    a_t: float
    b_t: float
    rho: float
    c: float
    lam_max: float
    theta: float


@dataclass(frozen=True)
class WalkEigenpair:
    """Unit eigenvector of the walk with eigenvalue exp(1j * phase)."""

    phase: float
    vector: np.ndarray


def _merged(values_mults: list[tuple[float, int]]) -> tuple[tuple[float, int], ...]:
    items = sorted((float(v), int(m)) for v, m in values_mults if m > 0)
    merged: list[list[float | int]] = []
    for value, mult in items:
        if merged and abs(value - merged[-1][0]) <= 1e-12:
            merged[-1][1] += mult
        else:
            merged.append([value, mult])
    return tuple((v, m) for v, m in merged)


def closed_form_spectrum(n: int, t: int) -> SpectralSummary:
    """Spectrum of T for a marked t-matching, by the case split above.

    t = 0 is the unsigned complete graph, handled as its own special case.

    Raises:
        MatchingTooLarge: if 2t > n+1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0 or 2 * t > n + 1:
        raise MatchingTooLarge(f"t={t} infeasible for n={n}")
    if t == 0:
        return SpectralSummary(
            n=n,
            t=0,
            eigenvalues=_merged([(-1.0 / n, n), (1.0, 1)]),
            s=float(n + 2),
            delta=float((n + 3) ** 2),
            a_t=-3.0,
            b_t=float(n),
            rho=1.0,
            c=float(n + 1),
            lam_max=1.0,
            theta=0.0,
        )
    s = n - 4 * t + 2
    delta = (n + 1) ** 2 + 4 * s
    root = np.sqrt(delta)
    a_t = (n - 3 - root) / 2
    b_t = (n - 3 + root) / 2
    perfect = 2 * t == n + 1
    if perfect:
        rho, c = 1.0, float(n + 1)
        eigenvalues = _merged([(-3.0 / n, t - 1), (1.0 / n, t), (b_t / n, 1)])
    else:
        rho = (-(s + 1) + root) / (4 * t)
        c = 2 * t * rho**2 + n + 1 - 2 * t
        eigenvalues = _merged(
            [
                (-3.0 / n, t - 1),
                (a_t / n, 1),
                (-1.0 / n, n - 2 * t),
                (1.0 / n, t),
                (b_t / n, 1),
            ]
        )
    lam_max = b_t / n
    return SpectralSummary(
        n=n,
        t=t,
        eigenvalues=eigenvalues,
        s=float(s),
        delta=float(delta),
        a_t=float(a_t),
        b_t=float(b_t),
        rho=float(rho),
        c=float(c),
        lam_max=float(lam_max),
        theta=float(np.arccos(np.clip(lam_max, -1.0, 1.0))),
    )


def principal_eigenvector(n: int, t: int) -> np.ndarray:
    """Unit eigenvector of T for the top eigenvalue, canonical labeling.

    Raises:
        ZeroMatching: if t = 0 (the uniform case is trivial and excluded).
        MatchingTooLarge: if 2t > n+1.
    """
    if t == 0:
        raise ZeroMatching("principal eigenvector is defined for t >= 1")
    summary = closed_form_spectrum(n, t)
    f = np.ones(n + 1)
    f[: 2 * t] = summary.rho
    return f / np.sqrt(summary.c)


def lift_to_walk(
    graph: SignedCompleteGraph,
    sign: SignAssignment,
    lam: float,
    f: np.ndarray,
) -> tuple[WalkEigenpair, WalkEigenpair]:
    """Lift a T-eigenpair (lam, f), |lam| < 1, to the walk eigenvectors.

    Returns the (+theta, -theta) pair; each returned vector is unit norm and
    satisfies U v = exp(1j * phase) v.

    Raises:
        DegenerateLift: if |lam| is 1 (sin theta = 0, no lift).
    """
    if not abs(lam) < 1.0 - 1e-14:
        raise DegenerateLift(f"|lambda|={abs(lam)} has no two-dimensional lift")
    theta = float(np.arccos(lam))
    base = apply_coboundary(graph, sign, np.asarray(f, dtype=complex))
    swapped = apply_shift(graph, base)
    denom = np.sqrt(2.0) * abs(np.sin(theta))
    plus = (base - np.exp(1j * theta) * swapped) / denom
    minus = (base - np.exp(-1j * theta) * swapped) / denom
    return WalkEigenpair(theta, plus), WalkEigenpair(-theta, minus)


def numeric_spectrum(
    matrix: np.ndarray, cluster_tol: float = 1e-7
) -> tuple[tuple[float, int], ...]:
    """Eigenvalue multiset of a symmetric matrix via a dense eigensolver.

    Eigenvalues closer than ``cluster_tol`` are clustered into one value
    (their mean) with summed multiplicity.  The tolerance sits between
    solver accuracy (~1e-12) and the smallest closed-form gaps on the
    verification grid (>= 2/n for n <= 60).

    Raises:
        NonSymmetric: if the matrix is not symmetric.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {matrix.shape}")
    scale = 1.0 + np.abs(matrix).max(initial=0.0)
    if np.abs(matrix - matrix.T).max(initial=0.0) > 1e-12 * scale:
        raise NonSymmetric("matrix is not symmetric")
    values = np.linalg.eigvalsh(matrix)
    clusters: list[list[float]] = []
    for value in values:
        if clusters and value - clusters[-1][-1] <= cluster_tol:
            clusters[-1].append(value)
        else:
            clusters.append([value])
    return tuple((float(np.mean(group)), len(group)) for group in clusters)


def expand_eigenvalues(pairs: tuple[tuple[float, int], ...]) -> np.ndarray:
    """Flatten a (value, multiplicity) multiset into a sorted array."""
    return np.sort(np.repeat([v for v, _ in pairs], [m for _, m in pairs]))
