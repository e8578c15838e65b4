"""Classical baseline: a simple random walk on the edges of the complete graph.

The walk lives on the line graph of the complete graph with n+1 vertices;
every edge has 2(n-1) neighbors, so the transition matrix is

    P = A(line graph) / (2(n-1)).

Deleting the rows and columns of the t marked edges gives the substochastic
matrix ``P_M`` whose top eigenvalue mu_m controls the expected hitting time
of the matching, of order 1/(1 - mu_m).

Spectral route: with B the vertex-edge incidence matrix over the unmarked
edges, P_M = (B^T B - 2I)/(2(n-1)), and the (n+1)x(n+1) Gram matrix B B^T
has the closed-form spectrum

    {n-3}^{t-1}  u  {n-1}^{n-t}  u  {mu_plus, mu_minus},
    mu_pm = (3n - 3 +- sqrt(n^2 + 6n + 9 - 16t)) / 2,

(for a perfect matching mu_minus coincides with n-1), obtained from the
2x2 quotient on the span of the indicators of matched/unmatched vertices.
Hence mu_m = (mu_plus - 2) / (2(n-1)).

The exact oracle solves the absorbing-chain system (I - P_M) h = 1 and
averages h over the uniform distribution on unmarked edges: a direct dense
solve up to n = 60, an unpreconditioned conjugate-gradient solve above
(I - P_M is symmetric positive definite), matrix-free in both storage and
application beyond the dense limit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import MatchingTooLarge, SingularSystem

__all__ = [
    "LineGraphWalk",
    "ClassicalWalkReport",
    "build_line_walk",
    "incidence_matrix",
    "incidence_gram",
    "gram_spectrum_closed_form",
    "quotient_matrix",
    "hitting_time_estimate",
]

DENSE_SOLVE_LIMIT = 60


def _edge_table(n: int, t: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All edges of the complete graph (u < v, lexicographic) and the kept mask."""
    eu, ev = np.triu_indices(n + 1, k=1)
    kept = np.ones(eu.size, dtype=bool)
    for i in range(t):
        u, v = 2 * i, 2 * i + 1
        # index of edge (u, v) in lexicographic (u < v) order
        j = u * (2 * n + 1 - u) // 2 + (v - u - 1)
        assert eu[j] == u and ev[j] == v
        kept[j] = False
    return eu, ev, kept


class LineGraphWalk:
    """Edge random walk of the complete graph with a canonical marked matching.

    ``P`` and ``P_M`` are CSR matrices for n <= dense_limit and None above;
    the matrix-free applications work at any size.
    """

    def __init__(self, n: int, t: int, dense_limit: int = DENSE_SOLVE_LIMIT):
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        if t < 0 or 2 * t > n + 1:
            raise MatchingTooLarge(f"t={t} infeasible for n={n}")
        self.n = n
        self.t = t
        eu, ev, kept = _edge_table(n, t)
        self.edge_origins = eu
        self.edge_termini = ev
        self.kept_mask = kept
        self.kept_origins = eu[kept]
        self.kept_termini = ev[kept]
        self.num_edges = eu.size
        self.num_kept = int(kept.sum())
        self.P = self.P_M = None
        if n <= dense_limit:
            self.P = self._transition_csr(eu, ev)
            self.P_M = self._transition_csr(self.kept_origins, self.kept_termini)

    def _transition_csr(self, eu: np.ndarray, ev: np.ndarray) -> sp.csr_matrix:
        m = eu.size
        cols = np.arange(m)
        rows = np.concatenate([eu, ev])
        data = np.ones(2 * m)
        B = sp.csr_matrix(
            (data, (rows, np.concatenate([cols, cols]))), shape=(self.n + 1, m)
        )
        A = (B.T @ B - 2 * sp.identity(m, format="csr")).tocsr()
        return A / (2 * (self.n - 1))

    def apply_deleted_transition(self, x: np.ndarray) -> np.ndarray:
        """Matrix-free y = P_M x via per-vertex sums over unmarked edges."""
        nv = self.n + 1
        s = np.bincount(self.kept_origins, weights=x, minlength=nv) + np.bincount(
            self.kept_termini, weights=x, minlength=nv
        )
        y = s[self.kept_origins] + s[self.kept_termini] - 2.0 * x
        return y / (2 * (self.n - 1))


@dataclass(frozen=True)
class ClassicalWalkReport:
    """Spectral hitting-time summary of the edge walk with absorbing matching."""

    n: int
    t: int
    mu_plus: float
    mu_minus: float
    mu_m: float
    est_hitting: float
    exact_hitting: float | None


def build_line_walk(n: int, t: int, dense_limit: int = DENSE_SOLVE_LIMIT) -> LineGraphWalk:
    """Edge walk of the complete graph on n+1 vertices with t marked edges."""
    return LineGraphWalk(n, t, dense_limit=dense_limit)


def incidence_matrix(n: int, t: int) -> np.ndarray:
    """Dense vertex-by-unmarked-edge incidence matrix (oracle helper)."""
    eu, ev, kept = _edge_table(n, t)
    ku, kv = eu[kept], ev[kept]
    B = np.zeros((n + 1, ku.size))
    B[ku, np.arange(ku.size)] = 1.0
    B[kv, np.arange(kv.size)] = 1.0
    return B


def incidence_gram(n: int, t: int) -> np.ndarray:
    """Gram matrix of the incidence over unmarked edges, canonical labeling.

    Diagonal n outside the matched vertex set and n-1 inside; off-diagonal 1
    except 0 on matched pairs.  Equals the 2x2 block matrix built from the
    cocktail-party adjacency on the matched block and the complete-graph
    adjacency on the rest.
    """
    if t < 0 or 2 * t > n + 1:
        raise MatchingTooLarge(f"t={t} infeasible for n={n}")
    G = np.ones((n + 1, n + 1))
    np.fill_diagonal(G, n)
    G[np.arange(2 * t), np.arange(2 * t)] = n - 1
    for i in range(t):
        G[2 * i, 2 * i + 1] = G[2 * i + 1, 2 * i] = 0.0
    return G


def gram_spectrum_closed_form(
    n: int, t: int
) -> tuple[float, float, tuple[tuple[float, int], ...]]:
    """(mu_plus, mu_minus, full multiset) of the incidence Gram matrix.

    Valid for every feasible t >= 1; in the perfect-matching case mu_minus
    equals n-1 and the returned multiset merges it accordingly.
    """
    if t < 1 or 2 * t > n + 1:
        raise MatchingTooLarge(f"t={t} infeasible for n={n} (need 1 <= 2t <= n+1)")
    root = np.sqrt(n * n + 6 * n + 9 - 16 * t)
    mu_plus = (3 * n - 3 + root) / 2
    mu_minus = (3 * n - 3 - root) / 2
    items = sorted(
        [(float(n - 3), t - 1), (float(n - 1), n - t), (mu_minus, 1), (mu_plus, 1)]
    )
    merged: list[list[float | int]] = []
    for value, mult in items:
        if mult > 0:
            if merged and abs(value - merged[-1][0]) <= 1e-9:
                merged[-1][1] += mult
            else:
                merged.append([value, mult])
    return float(mu_plus), float(mu_minus), tuple((v, m) for v, m in merged)


def quotient_matrix(n: int, t: int) -> np.ndarray:
    """2x2 quotient of the Gram matrix on the matched/unmatched indicator span."""
    return np.array(
        [[n + 2 * t - 3, n + 1 - 2 * t], [2 * t, 2 * n - 2 * t]], dtype=float
    )


def _exact_hitting(walk: LineGraphWalk) -> float:
    """Mean absorption time from the uniform start on unmarked edges."""
    m = walk.num_kept
    b = np.ones(m)
    if walk.P_M is not None:
        system = np.eye(m) - walk.P_M.toarray()
        try:
            h = np.linalg.solve(system, b)
        except np.linalg.LinAlgError as exc:  # cannot occur for t >= 1
            raise SingularSystem(str(exc)) from exc
        residual = np.abs(system @ h - b).max()
    else:
        op = spla.LinearOperator(
            (m, m), matvec=lambda x: x - walk.apply_deleted_transition(x)
        )
        h, info = spla.cg(op, b, rtol=1e-12, atol=0.0)
        if info != 0:
            raise SingularSystem(f"conjugate gradient did not converge (info={info})")
        residual = np.abs(op.matvec(h) - b).max()
    if residual > 1e-10 * max(1.0, np.abs(h).max()):
        raise SingularSystem(f"linear solve residual {residual:.3e} too large")
    return float(h.mean())


def hitting_time_estimate(
    n: int, t: int, exact: bool = True, dense_limit: int = DENSE_SOLVE_LIMIT
) -> ClassicalWalkReport:
    """Spectral estimate 1/(1 - mu_m) plus the exact absorbing-chain oracle.

    The uniform start over unmarked edges mirrors the uniform initial state
    of the quantum search; the order of the estimate is start-independent.

    Raises:
        MatchingTooLarge: if 2t > n+1; the estimate also needs t >= 1.
    """
    mu_plus, mu_minus, _ = gram_spectrum_closed_form(n, t)
    mu_m = (mu_plus - 2.0) / (2 * (n - 1))
    est = 1.0 / (1.0 - mu_m)
    exact_value = None
    if exact:
        exact_value = _exact_hitting(build_line_walk(n, t, dense_limit=dense_limit))
    return ClassicalWalkReport(
        n=n,
        t=t,
        mu_plus=mu_plus,
        mu_minus=mu_minus,
        mu_m=float(mu_m),
        est_hitting=float(est),
        exact_hitting=exact_value,
    )
