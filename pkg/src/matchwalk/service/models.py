"""Pydantic request/response models for the service endpoints."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class SpectrumRequest(BaseModel):
    n: int = Field(ge=1, description="every vertex has degree n (n+1 vertices)")
    t: int = Field(default=0, ge=0, description="number of marked matching edges")


class EigenvalueEntry(BaseModel):
    source: Literal["closed_form", "numeric"]
    eigenvalue: float
    multiplicity: int


class SpectrumResponse(BaseModel):
    n: int
    t: int
    s: float
    delta: float
    a_t: float
    b_t: float
    rho: float
    c: float
    lam_max: float
    theta: float
    entries: list[EigenvalueEntry]
    csv: str


class SearchRequest(BaseModel):
    n: int = Field(ge=2)
    t: int = Field(ge=1)
    steps: Optional[int] = Field(default=None, ge=0)
    initial: Literal["basis", "uniform"] = "basis"


class SearchResponse(BaseModel):
    n: int
    t: int
    initial: str
    theta_m: float
    k_f: int
    fp_at_kf: float
    peak_step: int
    k_total: float
    overlap: float
    probs: list[float]
    csv: str


class ClassicalRequest(BaseModel):
    n: int = Field(ge=2)
    t: int = Field(ge=1)
    exact: bool = True


class ClassicalResponse(BaseModel):
    n: int
    t: int
    mu_plus: float
    mu_minus: float
    mu_m: float
    est_hitting: float
    exact_hitting: Optional[float]
    csv: str


class SweepRequest(BaseModel):
    n_grid: Optional[list[int]] = None
    alpha: float = Field(default=0.0, ge=0.0, le=1.0)
    c: float = Field(default=1.0, gt=0.0)
    modes: list[Literal["quantum", "classical", "spectra"]] = Field(
        default=["quantum", "classical"]
    )
    seed: int = 0
    workers: int = Field(default=1, ge=1)


class SweepResponse(BaseModel):
    columns: list[str]
    rows: list[dict]
    csv: str


class FitRequest(BaseModel):
    csv: str
    column: str
    drop_smallest: int = Field(default=2, ge=0)


class FitResponse(BaseModel):
    column: str
    slope: float
    intercept: float
    r_squared: float
    residuals: list[float]


class ReportRequest(BaseModel):
    csv: str


class ReportResponse(BaseModel):
    table: str
    curves: dict[str, list[tuple[float, float]]]
    curve_csv: dict[str, str]
    ratio_slope: Optional[float]
