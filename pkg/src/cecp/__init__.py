"""Ordinal-pattern complexity analysis of time series.

The package symbolizes series into rank-order patterns, computes permutation
entropy and Jensen-Shannon statistical complexity, places series on the
complexity-entropy plane together with its theoretical extremal curves, and
tracks all of it through sliding windows. Synthetic generators and a panel
loader feed the pipeline; ``cecp.cli`` and ``cecp.service`` expose it.
"""

from .bounds import BoundCurve, lower_bound, upper_bound
from .errors import (
    CecpError,
    DimensionMismatchError,
    DuplicateDateError,
    InsufficientDataError,
    InvalidAlphabetError,
    InvalidDistributionError,
    InvalidInputError,
    PanelFormatError,
    UnsupportedDimensionError,
)
from .ingest import PanelSource, load_panel, write_wide_panel
from .patterns import (
    OrdinalPattern,
    PatternDistribution,
    RawSeries,
    extract_pattern,
    pattern_codes,
    pattern_distribution,
    with_jitter,
)
from .prng import SplitMix64
from .quantifiers import (
    Quantifiers,
    disequilibrium,
    inefficiency,
    jensen_shannon_divergence,
    max_jensen_shannon,
    normalized_entropy,
    shannon_entropy,
    statistical_complexity,
)
from .synth import GeneratorSpec, generate
from .windows import (
    AnalysisConfig,
    PeriodCluster,
    WindowResult,
    analyze_panel,
    group_periods,
    inefficiency_trajectory,
    sliding_analysis,
    window_count,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "BoundCurve",
    "CecpError",
    "DimensionMismatchError",
    "DuplicateDateError",
    "GeneratorSpec",
    "InsufficientDataError",
    "InvalidAlphabetError",
    "InvalidDistributionError",
    "InvalidInputError",
    "OrdinalPattern",
    "PanelFormatError",
    "PatternDistribution",
    "PeriodCluster",
    "PanelSource",
    "Quantifiers",
    "RawSeries",
    "SplitMix64",
    "UnsupportedDimensionError",
    "WindowResult",
    "analyze_panel",
    "disequilibrium",
    "extract_pattern",
    "generate",
    "group_periods",
    "inefficiency",
    "inefficiency_trajectory",
    "jensen_shannon_divergence",
    "load_panel",
    "lower_bound",
    "max_jensen_shannon",
    "normalized_entropy",
    "pattern_codes",
    "pattern_distribution",
    "shannon_entropy",
    "sliding_analysis",
    "statistical_complexity",
    "upper_bound",
    "window_count",
    "with_jitter",
    "write_wide_panel",
]
