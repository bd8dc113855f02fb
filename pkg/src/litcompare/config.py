"""Tunable pipeline parameters with their empirically-chosen defaults."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError

DEFAULT_MAX_DEPTH = 5
DEFAULT_SIMILARITY_THRESHOLD = 0.9
DEFAULT_MIN_SHARED = 2
DEFAULT_TOP_K = 3


@dataclass(frozen=True)
class SelectionConfig:
    """Bounds the transitive statement selection."""

    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValidationError("max_depth must be >= 1")


@dataclass(frozen=True)
class AlignmentConfig:
    """Threshold above which two property labels count as equivalent."""

    threshold: float = DEFAULT_SIMILARITY_THRESHOLD

    def __post_init__(self):
        if not (0 < self.threshold <= 1):
            raise ValidationError("threshold must be in (0, 1]")


@dataclass(frozen=True)
class ComparisonConfig:
    """Full configuration of a comparison table."""

    min_shared: int = DEFAULT_MIN_SHARED        # alpha: auto-visibility support
    threshold: float = DEFAULT_SIMILARITY_THRESHOLD  # tau
    max_depth: int = DEFAULT_MAX_DEPTH          # delta
    top_k: int = DEFAULT_TOP_K                  # k for candidate search
    transposed: bool = False
    hidden_groups: frozenset[str] = field(default_factory=frozenset)
    row_order: tuple[str, ...] = ()

    def __post_init__(self):
        if self.min_shared < 1:
            raise ValidationError("min_shared must be >= 1")
        if not (0 < self.threshold <= 1):
            raise ValidationError("threshold must be in (0, 1]")
        if self.max_depth < 1:
            raise ValidationError("max_depth must be >= 1")
        if self.top_k < 1:
            raise ValidationError("top_k must be >= 1")
