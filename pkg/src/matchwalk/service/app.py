"""FastAPI service wrapping the core package.

One POST endpoint per operation family; every response carries both the
structured values and the rendered CSV text, so clients can persist
byte-stable files without re-serializing.  Domain errors map to 422.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..classical import hitting_time_estimate
from ..errors import MatchwalkError
from ..graph import build_signed_complete_graph
from ..operators import weighted_adjacency
from ..search import run_search
from ..spectral import closed_form_spectrum, numeric_spectrum
from ..sweep import (
    DEFAULT_GRID,
    SWEEP_COLUMNS,
    SweepConfig,
    compare_report,
    fit_exponent,
    parse_sweep_csv,
    run_sweep,
)
from .models import (
    ClassicalRequest,
    ClassicalResponse,
    EigenvalueEntry,
    FitRequest,
    FitResponse,
    ReportRequest,
    ReportResponse,
    SearchRequest,
    SearchResponse,
    SpectrumRequest,
    SpectrumResponse,
    SweepRequest,
    SweepResponse,
)


def _provenance(n: int, t: int, matching) -> list[str]:
    pairs = ",".join(f"{u}-{v}" for u, v in matching)
    return [f"# graph n={n} t={t} matching={pairs}"]


def _fmt(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


def create_app() -> FastAPI:
    app = FastAPI(title="matchwalk", version=__version__)

    @app.exception_handler(MatchwalkError)
    async def _domain_error(request: Request, exc: MatchwalkError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest) -> SpectrumResponse:
        summary = closed_form_spectrum(req.n, req.t)
        graph, sign = build_signed_complete_graph(req.n, req.t)
        numeric = numeric_spectrum(weighted_adjacency(graph, sign))
        entries = [
            EigenvalueEntry(source="closed_form", eigenvalue=v, multiplicity=m)
            for v, m in summary.eigenvalues
        ] + [
            EigenvalueEntry(source="numeric", eigenvalue=v, multiplicity=m)
            for v, m in numeric
        ]
        lines = _provenance(req.n, req.t, graph.matching)
        lines.append("source,eigenvalue,multiplicity")
        for e in entries:
            lines.append(f"{e.source},{_fmt(e.eigenvalue)},{e.multiplicity}")
        return SpectrumResponse(
            n=req.n,
            t=req.t,
            s=summary.s,
            delta=summary.delta,
            a_t=summary.a_t,
            b_t=summary.b_t,
            rho=summary.rho,
            c=summary.c,
            lam_max=summary.lam_max,
            theta=summary.theta,
            entries=entries,
            csv="\n".join(lines) + "\n",
        )

    @app.post("/search", response_model=SearchResponse)
    def search(req: SearchRequest) -> SearchResponse:
        graph, sign = build_signed_complete_graph(req.n, req.t)
        trace = run_search(graph, sign, steps=req.steps, initial=req.initial)
        lines = _provenance(req.n, req.t, graph.matching)
        lines.append("n,t,k,FP_k")
        for k, fp in enumerate(trace.probs):
            lines.append(f"{req.n},{req.t},{k},{_fmt(fp)}")
        lines.append(
            f"# summary theta_m={_fmt(trace.theta)} k_f={trace.k_f} "
            f"FP_n={_fmt(trace.fp_at_kf)} k_total={_fmt(trace.k_total)} "
            f"overlap={_fmt(trace.overlap)}"
        )
        return SearchResponse(
            n=req.n,
            t=req.t,
            initial=trace.initial,
            theta_m=trace.theta,
            k_f=trace.k_f,
            fp_at_kf=trace.fp_at_kf,
            peak_step=trace.peak_step,
            k_total=trace.k_total,
            overlap=trace.overlap,
            probs=[float(p) for p in trace.probs],
            csv="\n".join(lines) + "\n",
        )

    @app.post("/classical", response_model=ClassicalResponse)
    def classical(req: ClassicalRequest) -> ClassicalResponse:
        report = hitting_time_estimate(req.n, req.t, exact=req.exact)
        graph, _ = build_signed_complete_graph(req.n, req.t)
        lines = _provenance(req.n, req.t, graph.matching)
        lines.append("n,t,mu_plus,mu_m,est_hitting,exact_hitting")
        lines.append(
            f"{req.n},{req.t},{_fmt(report.mu_plus)},{_fmt(report.mu_m)},"
            f"{_fmt(report.est_hitting)},{_fmt(report.exact_hitting)}"
        )
        return ClassicalResponse(
            n=req.n,
            t=req.t,
            mu_plus=report.mu_plus,
            mu_minus=report.mu_minus,
            mu_m=report.mu_m,
            est_hitting=report.est_hitting,
            exact_hitting=report.exact_hitting,
            csv="\n".join(lines) + "\n",
        )

    @app.post("/sweep", response_model=SweepResponse)
    def sweep(req: SweepRequest) -> SweepResponse:
        config = SweepConfig(
            n_grid=tuple(req.n_grid) if req.n_grid else DEFAULT_GRID,
            alpha=req.alpha,
            c=req.c,
            modes=frozenset(req.modes),
            seed=req.seed,
            workers=req.workers,
        )
        result = run_sweep(config)
        return SweepResponse(
            columns=list(SWEEP_COLUMNS),
            rows=[dict(row) for row in result.rows],
            csv=result.csv,
        )

    @app.post("/fit", response_model=FitResponse)
    def fit(req: FitRequest) -> FitResponse:
        rows = parse_sweep_csv(req.csv)
        result = fit_exponent(rows, req.column, drop_smallest=req.drop_smallest)
        return FitResponse(
            column=req.column,
            slope=result.slope,
            intercept=result.intercept,
            r_squared=result.r_squared,
            residuals=list(result.residuals),
        )

    @app.post("/report", response_model=ReportResponse)
    def report(req: ReportRequest) -> ReportResponse:
        rows = parse_sweep_csv(req.csv)
        result = compare_report(rows)
        curve_csv = {}
        for name, points in result.curves.items():
            lines = ["x,y"] + [f"{_fmt(x)},{_fmt(y)}" for x, y in points]
            curve_csv[name] = "\n".join(lines) + "\n"
        return ReportResponse(
            table=result.table,
            curves={k: list(v) for k, v in result.curves.items()},
            curve_csv=curve_csv,
            ratio_slope=result.ratio_fit.slope if result.ratio_fit else None,
        )

    return app
