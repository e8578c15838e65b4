"""Parameter sweeps, exponent fits and quantum/classical comparison tables.

A sweep fixes a matching-size law t(n) = ceil(c * n^alpha) and walks a grid
of n values, emitting one CSV row per cell with the quantum complexity
(theta_m, k_f, FP_n, k_total), the classical spectral estimate (mu_m,
est_hitting) and, up to the dense-solve limit, the exact absorbing-chain
hitting time.  Cells are independent and may run on a worker pool; rows are
ordered by n before writing, so output is deterministic regardless of
scheduling.  The matching of each cell is placed with a generator seeded
from (seed, n): every emitted quantity is invariant under the placement, and
rerunning a config reproduces byte-identical CSV.

CSV format: comma separator, '.' decimal point, one header row, LF line
endings, ``NA`` for absent values.  Provenance comment lines (``# ...``)
carry the config and each cell's graph description (n, t, matching pairs).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil

import numpy as np

from .classical import DENSE_SOLVE_LIMIT, hitting_time_estimate
from .errors import DegenerateFit, InfeasibleGrid, MissingMode
from .graph import build_signed_complete_graph
from .operators import weighted_adjacency
from .search import run_search
from .spectral import (
    closed_form_spectrum,
    expand_eigenvalues,
    numeric_spectrum,
)

__all__ = [
    "DEFAULT_GRID",
    "SWEEP_COLUMNS",
    "SWEEP_MODES",
    "SweepConfig",
    "SweepResult",
    "FitResult",
    "CompareReport",
    "matching_size",
    "run_sweep",
    "render_sweep_csv",
    "parse_sweep_csv",
    "fit_exponent",
    "compare_report",
]

# geometric grid (ratio ~sqrt(2)): enough points for slope fits within +-0.1
DEFAULT_GRID = (32, 45, 64, 91, 128, 181, 256, 362, 512)

SWEEP_COLUMNS = (
    "n",
    "alpha",
    "c",
    "t",
    "theta_m",
    "k_f",
    "FP_n",
    "k_total",
    "mu_m",
    "est_hitting",
    "exact_hitting",
)

SWEEP_MODES = ("quantum", "classical", "spectra")

SPECTRA_CHECK_LIMIT = 60


def matching_size(n: int, alpha: float, c: float) -> int:
    """t = ceil(c * n^alpha); raises InfeasibleGrid when above floor((n+1)/2)."""
    t = ceil(c * float(n) ** alpha)
    if t < 1 or 2 * t > n + 1:
        raise InfeasibleGrid(
            f"t=ceil({c}*{n}^{alpha})={t} infeasible for n={n}"
        )
    return t


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: grid, matching-size law, modes, seed and worker count."""

    n_grid: tuple[int, ...] = DEFAULT_GRID
    alpha: float = 0.0
    c: float = 1.0
    modes: frozenset[str] = frozenset({"quantum", "classical"})
    seed: int = 0
    workers: int = 1
    exact_limit: int = DENSE_SOLVE_LIMIT
    out: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "n_grid", tuple(int(n) for n in self.n_grid))
        object.__setattr__(self, "modes", frozenset(self.modes))
        unknown = self.modes - set(SWEEP_MODES)
        if unknown:
            raise ValueError(f"unknown modes {sorted(unknown)}")
        if self.c <= 0:
            raise InfeasibleGrid(f"need c > 0, got {self.c}")
        for n in self.n_grid:
            if n < 2:
                raise InfeasibleGrid(f"grid value n={n} below 2")
            if self.modes:
                matching_size(n, self.alpha, self.c)  # raises if infeasible


@dataclass(frozen=True)
class SweepResult:
    """Sweep rows plus the provenance needed to re-render the CSV."""

    config: SweepConfig
    rows: tuple[dict, ...]
    graphs: tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]

    @property
    def csv(self) -> str:
        return render_sweep_csv(self)


@dataclass(frozen=True)
class FitResult:
    """Least-squares slope of log(y) against log(n)."""

    slope: float
    intercept: float
    r_squared: float
    residuals: tuple[float, ...]
    points: tuple[tuple[float, float], ...] = field(default=())


@dataclass(frozen=True)
class CompareReport:
    """Side-by-side quantum vs classical costs with the speed-up ratio."""

    table: str
    curves: dict[str, tuple[tuple[float, float], ...]]
    ratio_fit: FitResult | None


def _sweep_cell(config: SweepConfig, n: int) -> tuple[dict, tuple]:
    t = matching_size(n, config.alpha, config.c)
    row = {key: None for key in SWEEP_COLUMNS}
    row["n"], row["alpha"], row["c"], row["t"] = n, config.alpha, config.c, t
    graph, sign = build_signed_complete_graph(
        n, t, placement="random", seed=[config.seed, n]
    )
    if "quantum" in config.modes:
        summary = closed_form_spectrum(n, t)
        trace = run_search(
            graph, sign, steps=int(np.floor(np.pi / (2 * summary.theta)))
        )
        row["theta_m"] = summary.theta
        row["k_f"] = trace.k_f
        row["FP_n"] = trace.fp_at_kf
        row["k_total"] = trace.k_total
    if "classical" in config.modes:
        report = hitting_time_estimate(n, t, exact=n <= config.exact_limit)
        row["mu_m"] = report.mu_m
        row["est_hitting"] = report.est_hitting
        row["exact_hitting"] = report.exact_hitting
    if "spectra" in config.modes and n <= SPECTRA_CHECK_LIMIT:
        closed = expand_eigenvalues(closed_form_spectrum(n, t).eigenvalues)
        numeric = expand_eigenvalues(numeric_spectrum(weighted_adjacency(graph, sign)))
        gap = float(np.abs(closed - numeric).max())
        if gap > 1e-9:
            raise InfeasibleGrid(
                f"spectra verification failed at n={n}, t={t}: deviation {gap:.3e}"
            )
    return row, (n, t, graph.matching)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run every cell of the sweep (concurrently if configured) and collect rows.

    Rows come back ordered by n; with an empty mode set the result carries
    no rows (header-only CSV) but still records the config.
    """
    cells: list[tuple[dict, tuple]] = []
    if config.modes:
        if config.workers > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                cells = list(pool.map(lambda n: _sweep_cell(config, n), config.n_grid))
        else:
            cells = [_sweep_cell(config, n) for n in config.n_grid]
        cells.sort(key=lambda cell: cell[1][:2])
    rows = tuple(row for row, _ in cells)
    graphs = tuple(meta for _, meta in cells)
    result = SweepResult(config=config, rows=rows, graphs=graphs)
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(result.csv)
    return result


def _format_value(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


def render_sweep_csv(result: SweepResult) -> str:
    """Deterministic CSV text for a sweep result (see module docstring)."""
    config = result.config
    lines = [
        "# matchwalk sweep",
        f"# alpha={_format_value(config.alpha)} c={_format_value(config.c)} "
        f"seed={config.seed} "
        f"modes={','.join(sorted(config.modes)) if config.modes else '-'}",
        f"# grid={','.join(str(n) for n in config.n_grid)}",
    ]
    for n, t, matching in result.graphs:
        pairs = ",".join(f"{u}-{v}" for u, v in matching)
        lines.append(f"# graph n={n} t={t} matching={pairs}")
    lines.append(",".join(SWEEP_COLUMNS))
    for row in result.rows:
        lines.append(",".join(_format_value(row[key]) for key in SWEEP_COLUMNS))
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> list[dict]:
    """Rows (typed dicts) from CSV text produced by :func:`render_sweep_csv`."""
    rows = []
    header: list[str] | None = None
    int_columns = {"n", "t", "k_f"}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split(",")
            continue
        values: dict = {}
        for key, raw in zip(header, line.split(",")):
            if raw == "NA":
                values[key] = None
            elif key in int_columns:
                values[key] = int(raw)
            else:
                values[key] = float(raw)
        rows.append(values)
    return rows


def fit_exponent(
    rows: list[dict], column: str, drop_smallest: int = 2
) -> FitResult:
    """Least-squares slope of log(column) vs log(n) over the sweep rows.

    The smallest ``drop_smallest`` n values are excluded by default: the
    scaling claims are asymptotic and the smallest cells carry finite-size
    transients.

    Raises:
        DegenerateFit: fewer than 4 usable points, or non-positive values.
    """
    points = sorted(
        (row["n"], row.get(column))
        for row in rows
        if row.get(column) is not None
    )
    points = points[drop_smallest:]
    if len(points) < 4:
        raise DegenerateFit(
            f"need >= 4 points for column {column!r}, have {len(points)}"
        )
    ys = np.array([y for _, y in points], dtype=float)
    if np.any(ys <= 0):
        raise DegenerateFit(f"column {column!r} has non-positive values")
    xs = np.log(np.array([n for n, _ in points], dtype=float))
    ys = np.log(ys)
    slope, intercept = np.polyfit(xs, ys, 1)
    predicted = slope * xs + intercept
    residuals = ys - predicted
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    r_squared = 1.0 if ss_tot < 1e-300 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return FitResult(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        residuals=tuple(float(r) for r in residuals),
        points=tuple((float(x), float(y)) for x, y in zip(xs, ys)),
    )


def compare_report(rows: list[dict]) -> CompareReport:
    """Quantum cost vs classical estimate, with the speed-up ratio column.

    Raises:
        MissingMode: if either the quantum or the classical columns are
            entirely absent from the dataset.
    """
    usable = [
        row
        for row in rows
        if row.get("k_total") is not None and row.get("est_hitting") is not None
    ]
    if not usable:
        raise MissingMode("report needs rows with both k_total and est_hitting")
    usable.sort(key=lambda row: row["n"])
    header = f"{'n':>6} {'t':>5} {'k_total':>14} {'est_hitting':>14} {'speedup':>12}"
    lines = [header, "-" * len(header)]
    quantum, classical, speedup = [], [], []
    for row in usable:
        ratio = row["est_hitting"] / row["k_total"]
        lines.append(
            f"{row['n']:>6} {row['t']:>5} {row['k_total']:>14.6g} "
            f"{row['est_hitting']:>14.6g} {ratio:>12.6g}"
        )
        quantum.append((float(row["n"]), float(row["k_total"])))
        classical.append((float(row["n"]), float(row["est_hitting"])))
        speedup.append((float(row["n"]), float(ratio)))
    ratio_fit = None
    if len(usable) >= 6:  # drop_smallest=2 still leaves >= 4 points
        ratio_rows = [{"n": n, "ratio": r} for n, r in speedup]
        ratio_fit = fit_exponent(ratio_rows, "ratio")
    return CompareReport(
        table="\n".join(lines) + "\n",
        curves={
            "quantum": tuple(quantum),
            "classical": tuple(classical),
            "speedup": tuple(speedup),
        },
        ratio_fit=ratio_fit,
    )
