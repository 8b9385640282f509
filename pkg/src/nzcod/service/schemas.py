"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class GenerateRequest(BaseModel):
    a: int = Field(ge=1, le=8, description="antenna exponent; 2**a antennas")
    kind: str = Field(default="nzcod", pattern="^(nzcod|scod)$")
    format: str = Field(default="json", pattern="^(json|text|design)$")


class GenerateResponse(BaseModel):
    a: int
    kind: str
    antennas: int
    variables: int
    design: Optional[dict[str, Any]] = None  # JSON wire format
    text: Optional[str] = None  # grid or notation rendering


class ClassifyRequest(BaseModel):
    design: dict[str, Any]


class ClassificationResponse(BaseModel):
    orthogonal: bool
    failed_condition: Optional[str] = None
    zero_count: int
    is_cod: bool
    is_scaled_cod: bool
    is_cis_cod: bool
    has_general_linear: bool
    interleaved_pairs: list[list[int]]


class VerifyRequest(BaseModel):
    a: int = Field(ge=1, le=10)
    deep: bool = False


class CheckReportModel(BaseModel):
    name: str
    a: int
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    a: int
    all_passed: bool
    reports: list[CheckReportModel]


class Table1RowModel(BaseModel):
    a: int
    b: int
    M: list[int]
    M_tilde: list[int]
    M_prime: list[int]


class Table1ErratumModel(BaseModel):
    a: int
    column: str
    printed: list[int]
    computed: list[int]


class Table1Response(BaseModel):
    rows: list[Table1RowModel]
    errata: list[Table1ErratumModel]
    matches_up_to_errata: bool


class ZeroFractionRowModel(BaseModel):
    a: int
    scod_fraction: str
    r_code_fraction: str
    nzcod_fraction: str
    scod_fraction_float: float


class CorpusReportModel(BaseModel):
    name: str
    passed: bool
    transcription_suspect: bool
    details: list[str]


class AnalyzeRequest(BaseModel):
    a: Optional[int] = Field(default=None, ge=1, le=8)
    kind: str = Field(default="nzcod", pattern="^(nzcod|scod)$")
    design: Optional[dict[str, Any]] = None
    constellation: str = Field(default="qam4", pattern="^qam(4|16|64)$")


class AnalyzeResponse(BaseModel):
    antennas: int
    variables: int
    rate: str
    orthogonal: bool
    zero_count: int
    zero_fraction: float
    is_cod: bool
    is_scaled_cod: bool
    is_cis_cod: bool
    interleaved_pairs: list[list[int]]
    constellation: str
    papr: float
    power_scale_avg: float
    power_scale_peak: float


class SimulateRequest(BaseModel):
    # Interactive endpoint: work per request is capped; use the CLI for
    # bulk runs.
    a: int = Field(ge=1, le=5)
    code: str = Field(default="nzcod", pattern="^(nzcod|scod|r3)$")
    constellation: str = Field(default="qam4", pattern="^qam(4|16|64)$")
    constraint: str = Field(default="avg", pattern="^(avg|peak)$")
    snr_grid_db: list[float] = Field(min_length=1, max_length=25)
    trials_per_point: int = Field(ge=1, le=50_000)
    seed: int = 0
    receive_antennas: int = Field(default=1, ge=1, le=4)


class SerPointModel(BaseModel):
    snr_db: float
    symbol_errors: int
    trials: int
    ser: float


class SimulateResponse(BaseModel):
    code: str
    antennas: int
    constellation: str
    constraint: str
    power_scale: float
    snr_definition: str
    points: list[SerPointModel]
    csv: str
