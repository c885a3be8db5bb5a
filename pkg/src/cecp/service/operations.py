"""Service operations: the one implementation behind both CLI and HTTP.

Each function takes a request model and returns a response model, raising
the package's domain errors on bad input. The FastAPI layer translates the
errors to HTTP payloads; the CLI translates them to exit codes.
"""

from __future__ import annotations

import math
from datetime import datetime

from ..bounds import lower_bound, upper_bound
from ..errors import InvalidInputError
from ..patterns import RawSeries, pattern_distribution
from ..quantifiers import Quantifiers
from ..synth import GeneratorSpec, generate
from ..windows import AnalysisConfig, WindowResult, group_periods, sliding_analysis
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    BoundsRequest,
    BoundsResponse,
    GenerateRequest,
    GenerateResponse,
    PeriodRecord,
    PlanePoint,
    QuantifyRequest,
    QuantifyResponse,
    SeriesAnalysis,
    SeriesPayload,
    WindowRecord,
)


def format_stamp(stamp: datetime | None) -> str | None:
    """ISO-8601 rendering, date-only when there is no time of day."""
    if stamp is None:
        return None
    if isinstance(stamp, datetime):
        if (stamp.hour, stamp.minute, stamp.second, stamp.microsecond) == (0, 0, 0, 0):
            return stamp.date().isoformat()
        return stamp.isoformat()
    return stamp.isoformat()  # datetime.date


def parse_stamp(text: str) -> datetime:
    try:
        return datetime.fromisoformat(text)
    except ValueError:
        raise InvalidInputError(f"timestamp {text!r} is not ISO-8601") from None


def payload_to_series(payload: SeriesPayload) -> RawSeries:
    stamps = None
    if payload.timestamps is not None:
        stamps = tuple(parse_stamp(t) for t in payload.timestamps)
    return RawSeries(values=payload.values, timestamps=stamps, label=payload.label)


def series_to_payload(series: RawSeries) -> SeriesPayload:
    stamps = None
    if series.timestamps is not None:
        stamps = [format_stamp(t) for t in series.timestamps]
    return SeriesPayload(
        label=series.label, values=[float(v) for v in series.values], timestamps=stamps
    )


def _window_record(label: str, w: WindowResult) -> WindowRecord:
    return WindowRecord(
        series_label=label,
        window_index=w.index,
        start_date=format_stamp(w.start_timestamp),
        end_date=format_stamp(w.end_timestamp),
        entropy=w.entropy,
        complexity=w.complexity,
        inefficiency=w.inefficiency,
    )


def _is_undersampled(cfg: AnalysisConfig) -> bool:
    samples = cfg.window_length - (cfg.dimension - 1) * cfg.delay
    return samples < 5 * math.factorial(cfg.dimension)


def run_analysis(request: AnalyzeRequest) -> AnalyzeResponse:
    """Sliding-window analysis of every series, output sorted by label."""
    cfg = AnalysisConfig(**request.settings.model_dump())
    panel = [payload_to_series(p) for p in request.series]
    labels = [s.label for s in panel]
    if len(set(labels)) != len(labels):
        raise InvalidInputError("series labels must be unique")
    undersampled = _is_undersampled(cfg)
    analyses = []
    for series in sorted(panel, key=lambda s: s.label):
        results = sliding_analysis(series, cfg, workers=request.workers)
        clusters = group_periods(results, cfg.period_size)
        analyses.append(
            SeriesAnalysis(
                label=series.label,
                undersampled=undersampled,
                windows=[_window_record(series.label, w) for w in results],
                periods=[
                    PeriodRecord(
                        series_label=series.label,
                        period_id=c.period_id,
                        size=c.size,
                        centroid_entropy=c.centroid_entropy,
                        centroid_complexity=c.centroid_complexity,
                    )
                    for c in clusters
                ],
            )
        )
    return AnalyzeResponse(series=analyses)


def run_bounds(request: BoundsRequest) -> BoundsResponse:
    """Lower and upper extremal curves of the plane for one alphabet size."""
    points = []
    for curve in (
        lower_bound(request.alphabet_size, request.resolution),
        upper_bound(request.alphabet_size, request.resolution),
    ):
        points.extend(
            PlanePoint(kind=curve.kind, entropy=h, complexity=c) for h, c in curve.points
        )
    return BoundsResponse(
        alphabet_size=request.alphabet_size, resolution=request.resolution, points=points
    )


def run_generate(request: GenerateRequest) -> GenerateResponse:
    """Synthesize one series from a seeded generator spec."""
    spec = GeneratorSpec(
        kind=request.kind,
        length=request.length,
        seed=request.seed,
        r=request.r,
        x0=request.x0,
        transient=request.transient,
        label=request.label,
    )
    return GenerateResponse(series=series_to_payload(generate(spec)))


def run_quantify(request: QuantifyRequest) -> QuantifyResponse:
    """Whole-series quantifiers, no windowing."""
    dist = pattern_distribution(request.values, request.dimension, request.delay)
    q = Quantifiers.from_distribution(dist)
    return QuantifyResponse(
        entropy=q.entropy,
        complexity=q.complexity,
        inefficiency=q.inefficiency,
        alphabet_size=q.alphabet_size,
        sample_count=dist.sample_count,
        undersampled=dist.undersampled,
    )
