"""Request and response models of the HTTP service.

Dates travel as ISO-8601 strings (date-only when there is no time of day).
Floats travel as JSON numbers, which round-trip IEEE doubles exactly, so a
client computing through the service sees bit-identical results to a client
calling the library in process.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..synth import DEFAULT_TRANSIENT


class SeriesPayload(BaseModel):
    label: str = ""
    values: list[float]
    timestamps: list[str] | None = None  # ISO-8601, strictly increasing


class AnalysisSettings(BaseModel):
    dimension: int = 4
    delay: int = 1
    window_length: int = 300
    step: int = 20
    period_size: int = 16
    max_windows: int | None = None


class AnalyzeRequest(BaseModel):
    series: list[SeriesPayload]
    settings: AnalysisSettings = Field(default_factory=AnalysisSettings)
    workers: int | None = None  # execution hint, never affects the numbers


class WindowRecord(BaseModel):
    series_label: str
    window_index: int
    start_date: str | None = None
    end_date: str | None = None
    entropy: float
    complexity: float
    inefficiency: float


class PeriodRecord(BaseModel):
    series_label: str
    period_id: int
    size: int
    centroid_entropy: float
    centroid_complexity: float


class SeriesAnalysis(BaseModel):
    label: str
    undersampled: bool
    windows: list[WindowRecord]
    periods: list[PeriodRecord]


class AnalyzeResponse(BaseModel):
    series: list[SeriesAnalysis]  # sorted by label


class BoundsRequest(BaseModel):
    alphabet_size: int
    resolution: int = 1000


class PlanePoint(BaseModel):
    kind: str  # "lower" | "upper"
    entropy: float
    complexity: float


class BoundsResponse(BaseModel):
    alphabet_size: int
    resolution: int
    points: list[PlanePoint]  # lower curve first, then upper, entropy ascending


class GenerateRequest(BaseModel):
    kind: str
    length: int
    seed: int = 0
    r: float = 4.0
    x0: float | None = None
    transient: int = DEFAULT_TRANSIENT
    label: str | None = None


class GenerateResponse(BaseModel):
    series: SeriesPayload


class QuantifyRequest(BaseModel):
    values: list[float]
    dimension: int = 4
    delay: int = 1


class QuantifyResponse(BaseModel):
    entropy: float
    complexity: float
    inefficiency: float
    alphabet_size: int
    sample_count: int
    undersampled: bool


class HealthResponse(BaseModel):
    status: str
    version: str
