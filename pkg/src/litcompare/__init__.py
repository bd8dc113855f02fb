"""Statement-graph engine for generating and publishing literature-survey
comparison tables."""

from .config import AlignmentConfig, ComparisonConfig, SelectionConfig
from .graph import GraphStore, Literal, Resource, Statement
from .table import ComparisonTable, build_table

__all__ = [
    "AlignmentConfig",
    "ComparisonConfig",
    "ComparisonTable",
    "GraphStore",
    "Literal",
    "Resource",
    "SelectionConfig",
    "Statement",
    "build_table",
]
